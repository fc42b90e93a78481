"""Exact integer Laurent polynomials in one variable ``x`` and matrices over them.

Coefficients are Python ints, so nothing overflows no matter how large the
intermediate values of an elimination get.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union
from collections.abc import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "LaurentPoly",
    "LaurentMatrix",
    "NotDivisibleError",
    "X",
    "determinant",
    "normalize",
    "substitute",
]


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


Coercible = Union["LaurentPoly", int]


class LaurentPoly:
    """Immutable sparse Laurent polynomial ``sum c_k x^k`` with integer ``c_k``.

    The zero polynomial has no terms; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for exp, coef in terms.items():
                if not isinstance(exp, int) or not isinstance(coef, int):
                    raise TypeError("exponents and coefficients must be ints")
                if coef:
                    clean[exp] = coef
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def monomial(cls, coef: int = 1, exp: int = 0) -> LaurentPoly:
        return cls({exp: coef})

    @classmethod
    def constant(cls, value: int) -> LaurentPoly:
        return cls({0: value})

    @classmethod
    def coerce(cls, value: Coercible) -> LaurentPoly:
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"cannot coerce {value!r} to LaurentPoly")
        return cls.constant(value)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(iter(self._terms))

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(reversed(self._terms))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """True for ``±x^k``, the units of ``Z[x, 1/x]``."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: Coercible) -> LaurentPoly:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for exp, coef in other._terms.items():
            out[exp] = out.get(exp, 0) + coef
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Coercible) -> LaurentPoly:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> LaurentPoly:
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Coercible) -> LaurentPoly:
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def scalar_mul(self, k: int) -> LaurentPoly:
        return LaurentPoly({e: k * c for e, c in self._terms.items()})

    def __pow__(self, power: int) -> LaurentPoly:
        if power < 0:
            if not self.is_monomial():
                raise NotDivisibleError(f"{self} is not invertible")
            (exp, coef), = self._terms.items()
            if abs(coef) != 1:
                raise NotDivisibleError(f"{self} is not invertible")
            return LaurentPoly({exp * power: coef ** (-power)})
        result = LaurentPoly.constant(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``x^k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def invert_variable(self) -> LaurentPoly:
        """Substitute ``x -> 1/x`` by negating exponents."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def exact_div(self, other: Coercible) -> LaurentPoly:
        """Quotient ``self / other``; raise :class:`NotDivisibleError` on a remainder."""
        other = LaurentPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        lead_exp, lead_coef = other.max_exp, other._terms[other.max_exp]
        floor = self.min_exp - other.min_exp
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            q_exp = top - lead_exp
            q_coef, r = divmod(rem[top], lead_coef)
            if r or q_exp < floor:
                raise NotDivisibleError(f"{self} is not divisible by {other}")
            quot[q_exp] = q_coef
            for e, c in other._terms.items():
                k = e + q_exp
                v = rem.get(k, 0) - q_coef * c
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot)

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (exp, coef) in enumerate(self._terms.items()):
            sign = "-" if coef < 0 else "+"
            mag = abs(coef)
            if exp == 0:
                body = str(mag)
            else:
                var = "x" if exp == 1 else f"x^{exp}"
                body = var if mag == 1 else f"{mag}{var}"
            if i == 0:
                parts.append(("-" if coef < 0 else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    _TERM = re.compile(r"([+-]?)\s*(\d*)\s*(?:(x)(?:\^\(?([+-]?\d+)\)?)?)?")

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse the rendering produced by ``str``, e.g. ``-x^-2 + 3x^-1 - 3``."""
        s = text.replace(" ", "")
        if s == "0":
            return cls()
        if not s:
            raise ValueError("empty polynomial text")
        out: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"bad polynomial term at offset {pos} in {text!r}")
            if pos > 0 and not m.group(1):
                raise ValueError(f"missing sign at offset {pos} in {text!r}")
            coef = int(m.group(2)) if m.group(2) else 1
            if m.group(1) == "-":
                coef = -coef
            exp = 0
            if m.group(3):
                exp = int(m.group(4)) if m.group(4) is not None else 1
            out[exp] = out.get(exp, 0) + coef
            pos = m.end()
        return cls(out)

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self._terms.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> LaurentPoly:
        return cls({int(e): int(c) for e, c in data.items()})


X = LaurentPoly.monomial(1, 1)
ONE = LaurentPoly.constant(1)
ZERO = LaurentPoly()


def normalize(p: LaurentPoly) -> LaurentPoly:
    """Canonical representative of ``{±x^k p}``: lowest term moved to ``x^0``
    with a positive coefficient."""
    if p.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    q = p.shift(-p.min_exp)
    return -q if q.coefficient(0) < 0 else q


def substitute(p: LaurentPoly, value: Fraction | int) -> Fraction:
    """Exact value of ``p`` at a nonzero rational point."""
    value = Fraction(value)
    if value == 0:
        raise ZeroDivisionError("Laurent polynomial evaluated at 0")
    return sum((Fraction(c) * value**e for e, c in p.items()), Fraction(0))


class LaurentMatrix:
    """Dense ``rows x cols`` matrix of :class:`LaurentPoly`."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[Coercible]], ncols: int | None = None):
        self.rows = tuple(tuple(LaurentPoly.coerce(v) for v in row) for row in rows)
        self.nrows = len(self.rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix rows")
        self.ncols = ncols

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> LaurentMatrix:
        ncols = nrows if ncols is None else ncols
        return cls(([ZERO] * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> LaurentMatrix:
        return cls.diagonal([ONE] * n)

    @classmethod
    def diagonal(cls, entries: Sequence[Coercible]) -> LaurentMatrix:
        n = len(entries)
        return cls(
            ([entries[i] if i == j else ZERO for j in range(n)] for i in range(n)), n
        )

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, key: tuple[int, int]) -> LaurentPoly:
        i, j = key
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __add__(self, other: LaurentMatrix) -> LaurentMatrix:
        self._same_shape(other)
        return LaurentMatrix(
            ([a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __sub__(self, other: LaurentMatrix) -> LaurentMatrix:
        self._same_shape(other)
        return LaurentMatrix(
            ([a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __neg__(self) -> LaurentMatrix:
        return LaurentMatrix(([-a for a in r] for r in self.rows), self.ncols)

    def __matmul__(self, other: LaurentMatrix) -> LaurentMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.transpose().rows
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = ZERO
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return LaurentMatrix(out, other.ncols)

    def transpose(self) -> LaurentMatrix:
        return LaurentMatrix(zip(*self.rows), self.nrows) if self.nrows else LaurentMatrix([], 0)

    def map(self, fn) -> LaurentMatrix:
        return LaurentMatrix(([fn(a) for a in r] for r in self.rows), self.ncols)

    def with_entry(self, i: int, j: int, value: Coercible) -> LaurentMatrix:
        rows = [list(r) for r in self.rows]
        rows[i][j] = LaurentPoly.coerce(value)
        return LaurentMatrix(rows, self.ncols)

    def delete_columns(self, cols: Iterable[int]) -> LaurentMatrix:
        drop = set(cols)
        keep = [j for j in range(self.ncols) if j not in drop]
        return LaurentMatrix(([r[j] for j in keep] for r in self.rows), len(keep))

    def determinant(self) -> LaurentPoly:
        return determinant(self)

    def to_json(self) -> list[list[dict[str, int]]]:
        return [[a.to_json() for a in r] for r in self.rows]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[Mapping[str, int]]]) -> LaurentMatrix:
        return cls([[LaurentPoly.from_json(a) for a in r] for r in data])

    def __str__(self) -> str:
        cells = [[str(a) for a in r] for r in self.rows]
        if not cells:
            return "[]"
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    def __repr__(self) -> str:
        return f"LaurentMatrix({self.nrows}x{self.ncols})"

    def _same_shape(self, other: LaurentMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")


def determinant(m: LaurentMatrix | Sequence[Sequence[Coercible]]) -> LaurentPoly:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Each row is first multiplied by the power of ``x`` that clears its negative
    exponents, so every division inside the elimination happens in ``Z[x]``;
    the accumulated shift is divided back out at the end. Every Bareiss division
    is checked to be exact.
    """
    if not isinstance(m, LaurentMatrix):
        m = LaurentMatrix(m)
    n = m.nrows
    if m.ncols != n:
        raise ValueError(f"determinant of a non-square {m.nrows}x{m.ncols} matrix")
    if n == 0:
        return ONE

    total_shift = 0
    a: list[list[LaurentPoly]] = []
    for row in m.rows:
        lows = [p.min_exp for p in row if p]
        k = max(0, -min(lows)) if lows else 0
        total_shift += k
        a.append([p.shift(k) if k else p for p in row])

    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not a[k][k]:
            pivot = next((i for i in range(k + 1, n) if a[i][k]), None)
            if pivot is None:
                return ZERO
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = row_i[j] * akk - aik * row_k[j]
                row_i[j] = num.exact_div(prev) if prev != ONE else num
            row_i[k] = ZERO
        prev = akk
    det = a[n - 1][n - 1]
    det = det.shift(-total_shift)
    return -det if sign < 0 else det
