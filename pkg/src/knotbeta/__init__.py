"""Exact beta and Alexander invariants of long knot diagrams, and checks relating them."""

from .diagram import (
    BraidWord,
    ClosedDiagram,
    LongKnotDiagram,
    from_braid,
    make_long,
    parse_braid,
    parse_long_pd,
    parse_pd,
    render_pd,
    validate,
)
from .examples import paper_example
from .invariants import (
    beta,
    compute_bundle,
    delta,
    det_w_unit,
    verify_lemmas,
    verify_proposition,
    verify_theorem,
)
from .laurent import LaurentMatrix, LaurentPoly, determinant, normalize, substitute

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "ClosedDiagram",
    "LaurentMatrix",
    "LaurentPoly",
    "LongKnotDiagram",
    "beta",
    "compute_bundle",
    "delta",
    "det_w_unit",
    "determinant",
    "from_braid",
    "make_long",
    "normalize",
    "paper_example",
    "parse_braid",
    "parse_long_pd",
    "parse_pd",
    "render_pd",
    "substitute",
    "validate",
    "verify_lemmas",
    "verify_proposition",
    "verify_theorem",
]
