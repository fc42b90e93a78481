"""beta, the Alexander polynomial, and executable checks relating them.

The checks compare exact Laurent matrices entry by entry and collect every
mismatch as a :class:`Witness`, so a failing diagram says where it fails.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field, replace

from .diagram import LongKnotDiagram
from .laurent import ONE, X, LaurentMatrix, LaurentPoly, determinant
from .planar import (
    IntMatrix,
    alexander_matrix,
    sign_data,
    traversal_matrix,
    winding_matrix,
)

__all__ = [
    "InvariantBundle",
    "VerificationReport",
    "Witness",
    "WindingDeterminantError",
    "beta",
    "compute_bundle",
    "delta",
    "det_w_unit",
    "verify_lemmas",
    "verify_proposition",
    "verify_theorem",
]


class WindingDeterminantError(AssertionError):
    pass


def _int_matrix(m: IntMatrix) -> LaurentMatrix:
    return LaurentMatrix(m, len(m))


def _diag_int(values) -> IntMatrix:
    n = len(values)
    return tuple(tuple(values[i] if i == j else 0 for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class InvariantBundle:
    """All matrices attached to one numbered long knot.

    ``x_neg_s`` is ``diag(x^-S(i))`` and ``x_neg_half`` is
    ``diag(x^-(1+S(i))/2)``.
    """

    T: IntMatrix
    sigma: tuple[int, ...]
    d: tuple[int, ...]
    S: tuple[int, ...]
    x_neg_s: LaurentMatrix
    x_neg_half: LaurentMatrix
    A: LaurentMatrix
    W: IntMatrix
    beta: LaurentPoly
    delta: LaurentPoly
    l: int

    @property
    def n(self) -> int:
        return len(self.S)

    @property
    def Sigma(self) -> IntMatrix:
        return _diag_int(self.sigma)

    @property
    def D(self) -> IntMatrix:
        return _diag_int(self.d)

    @property
    def S_matrix(self) -> IntMatrix:
        return _diag_int(self.S)

    def beta_matrix(self) -> LaurentMatrix:
        """``I + T (I - X^-S)``."""
        n = self.n
        ident = LaurentMatrix.identity(n)
        return ident + _int_matrix(self.T) @ (ident - self.x_neg_s)

    def proposition_rhs(self) -> LaurentMatrix:
        """``I + T^t (I - X^-S)``."""
        n = self.n
        ident = LaurentMatrix.identity(n)
        return ident + _int_matrix(self.T).transpose() @ (ident - self.x_neg_s)

    def proposition_lhs(self) -> LaurentMatrix:
        """``Sigma A W S X^-(1+S)/2``."""
        return (
            LaurentMatrix.diagonal(self.sigma)
            @ self.A
            @ _int_matrix(self.W)
            @ LaurentMatrix.diagonal(self.S)
            @ self.x_neg_half
        )

    def with_flipped_t(self, i: int, j: int) -> InvariantBundle:
        """Copy with ``T[i][j]`` (1-based) toggled and beta recomputed; for exercising failure paths."""
        t = [list(r) for r in self.T]
        t[i - 1][j - 1] ^= 1
        bad = replace(self, T=tuple(tuple(r) for r in t))
        return replace(bad, beta=determinant(bad.beta_matrix()))


def compute_bundle(lk: LongKnotDiagram) -> InvariantBundle:
    sd = sign_data(lk)
    x_neg_s = LaurentMatrix.diagonal([X ** (-s) for s in sd.svec])
    x_neg_half = LaurentMatrix.diagonal([X ** (-(1 + s) // 2) for s in sd.svec])
    a = alexander_matrix(lk) if lk.n else LaurentMatrix([], 0)
    bundle = InvariantBundle(
        T=traversal_matrix(lk),
        sigma=sd.sigma,
        d=sd.dvec,
        S=sd.svec,
        x_neg_s=x_neg_s,
        x_neg_half=x_neg_half,
        A=a,
        W=winding_matrix(lk),
        beta=ONE,
        delta=determinant(a) if lk.n else ONE,
        l=sum(1 for s in sd.svec if s == 1),
    )
    return replace(bundle, beta=determinant(bundle.beta_matrix()))


def beta(lk: LongKnotDiagram) -> LaurentPoly:
    """``det(I + T(I - X^-S))``."""
    return compute_bundle(lk).beta


def delta(lk: LongKnotDiagram) -> LaurentPoly:
    """Determinant of the Alexander incidence matrix; 1 for the crossingless diagram."""
    if lk.n == 0:
        return ONE
    return determinant(alexander_matrix(lk))


@dataclass
class Witness:
    location: str
    expected: str
    actual: str


@dataclass
class VerificationReport:
    theorem_holds: bool
    sign: int
    l: int
    proposition_holds: bool
    lemma1_holds: bool
    lemma2_holds: bool
    detW: int
    failures: list[Witness] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.theorem_holds
            and self.proposition_holds
            and self.lemma1_holds
            and self.lemma2_holds
            and abs(self.detW) == 1
        )

    def to_json(self) -> dict:
        return asdict(self)


def check_theorem(b: InvariantBundle) -> tuple[bool, int, list[Witness]]:
    """Find ``s`` in {1, -1} with ``beta == s x^-l delta``; the sign is found, not assumed."""
    scaled = b.delta.shift(-b.l)
    for s in (1, -1):
        if b.beta == (scaled if s == 1 else -scaled):
            return True, s, []
    return False, 0, [Witness("theorem", f"+-({scaled})", str(b.beta))]


def check_proposition(b: InvariantBundle) -> list[Witness]:
    lhs, rhs = b.proposition_lhs(), b.proposition_rhs()
    return [
        Witness(f"proposition[{i + 1},{j + 1}]", str(rhs[i, j]), str(lhs[i, j]))
        for i in range(b.n)
        for j in range(b.n)
        if lhs[i, j] != rhs[i, j]
    ]


def check_lemmas(b: InvariantBundle) -> tuple[list[Witness], list[Witness]]:
    """Diagonal and off-diagonal identities for ``A W``."""
    aw = b.A @ _int_matrix(b.W) if b.n else LaurentMatrix([], 0)
    diag_bad, off_bad = [], []
    x_minus_1 = X - 1
    for i in range(b.n):
        for j in range(b.n):
            if i == j:
                want = LaurentPoly.monomial(b.d[j], (1 + b.S[j]) // 2)
                if aw[i, j] != want:
                    diag_bad.append(Witness(f"lemma1[{j + 1}]", str(want), str(aw[i, j])))
            else:
                want = x_minus_1.scalar_mul(b.sigma[i] * b.T[j][i])
                if aw[i, j] != want:
                    off_bad.append(
                        Witness(f"lemma2[{i + 1},{j + 1}]", str(want), str(aw[i, j]))
                    )
    return diag_bad, off_bad


def _int_det(m: IntMatrix) -> int:
    det = determinant(_int_matrix(m))
    return det.coefficient(0)


def verify_proposition(lk: LongKnotDiagram) -> list[Witness]:
    """Mismatching cells of ``Sigma A W S X^-(1+S)/2 = I + T^t(I - X^-S)``; empty when it holds."""
    return check_proposition(compute_bundle(lk))


def verify_lemmas(lk: LongKnotDiagram) -> tuple[list[Witness], list[Witness]]:
    return check_lemmas(compute_bundle(lk))


def det_w_unit(lk: LongKnotDiagram) -> int:
    """``det W``, which must be a unit."""
    det = _int_det(winding_matrix(lk)) if lk.n else 1
    if abs(det) != 1:
        raise WindingDeterminantError(f"det W = {det}, expected ±1")
    return det


def report_from_bundle(b: InvariantBundle) -> VerificationReport:
    theorem, sign, failures = check_theorem(b)
    prop = check_proposition(b)
    lem1, lem2 = check_lemmas(b)
    det_w = _int_det(b.W) if b.n else 1
    failures = failures + prop + lem1 + lem2
    if abs(det_w) != 1:
        failures.append(Witness("detW", "±1", str(det_w)))
    return VerificationReport(
        theorem_holds=theorem,
        sign=sign,
        l=b.l,
        proposition_holds=not prop,
        lemma1_holds=not lem1,
        lemma2_holds=not lem2,
        detW=det_w,
        failures=failures,
    )


def verify_theorem(lk: LongKnotDiagram) -> VerificationReport:
    """Check ``beta = ±x^-l delta`` along with the matrix identity, both
    entrywise lemmas and ``det W = ±1`` on one diagram."""
    return report_from_bundle(compute_bundle(lk))
