"""Built-in diagrams addressable by name from the command line."""

from __future__ import annotations

from importlib import resources

from .diagram import LongKnotDiagram, from_braid, make_long, parse_braid, parse_long_pd

BRAIDS = {
    "trefoil": "strands 2\ns1 s1 s1\n",
    "figure8": "strands 3\ns1 s2^-1 s1 s2^-1\n",
    "unknot": "strands 1\n",
    "kink": "strands 2\ns1\n",
}

NAMES = ("paper", *BRAIDS)


def example_text(name: str) -> str:
    if name == "paper":
        return resources.files("knotbeta").joinpath("data/paper.pd").read_text()
    try:
        return BRAIDS[name]
    except KeyError:
        raise KeyError(f"unknown example {name!r}; choose from {', '.join(NAMES)}") from None


def load_example(name: str) -> LongKnotDiagram:
    """The six-crossing example, with its fixed crossing and region numbering."""
    text = example_text(name)
    if name == "paper":
        return parse_long_pd(text)
    return make_long(from_braid(parse_braid(text)), 0)


def paper_example() -> LongKnotDiagram:
    return load_example("paper")
