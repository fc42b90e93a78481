"""Combinatorial data read off a long knot diagram.

Everything here is computed from the crossing quadruples alone: the walk from
the basepoint, crossing signs, spans, the under-crossing matrix ``T``, the
faces of the diagram, the Alexander incidence matrix and the winding matrix.
Matrices indexed by crossings use crossing numbers 1..n in row/column order
(row ``0`` is crossing 1), and likewise for bounded regions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .diagram import Corner, LongKnotDiagram, _face_cycles
from .laurent import X, LaurentMatrix, LaurentPoly

__all__ = [
    "FaceSet",
    "InconsistentWindingError",
    "NonAdjacentRegionsError",
    "SignData",
    "Visit",
    "alexander_matrix",
    "alexander_minor",
    "faces",
    "full_alexander_matrix",
    "region_adjacency",
    "sign_data",
    "span_edges",
    "traversal_matrix",
    "visit_sequence",
    "winding_matrix",
]

IntMatrix = tuple[tuple[int, ...], ...]
Scheme = Literal["modified", "classical"]


class InconsistentWindingError(AssertionError):
    """Two dual paths assigned different winding numbers to one region."""


class NonAdjacentRegionsError(ValueError):
    pass


@dataclass(frozen=True)
class Visit:
    crossing: int
    over: bool

    def __str__(self) -> str:
        return f"{self.crossing}{'o' if self.over else 'u'}"


@dataclass(frozen=True)
class SignData:
    sigma: tuple[int, ...]
    dvec: tuple[int, ...]
    svec: tuple[int, ...]


@dataclass(frozen=True)
class FaceSet:
    """Faces as cycles of corners ``(crossing number, quadrant)``.

    ``unbounded`` holds the face to the right and the face to the left of the
    basepoint edge; ``bounded_order[k]`` is the face index of region ``k + 1``.
    """

    faces: tuple[tuple[Corner, ...], ...]
    unbounded: tuple[int, int]
    bounded_order: tuple[int, ...]

    @property
    def column_order(self) -> tuple[int, ...]:
        """Face index per column of the full ``n x (n+2)`` Alexander matrix."""
        return self.bounded_order + self.unbounded


def _walk(lk: LongKnotDiagram) -> list[tuple[int, bool]]:
    """``(crossing index, over?)`` per visit; visit ``k`` is entered by edge ``basepoint + k``."""
    d = lk.diagram
    m = d.edge_count
    out = []
    for k in range(m):
        ci, port = d.head((lk.basepoint_edge + k) % m)
        out.append((ci, port in (1, 3)))
    return out


def _visit_positions(lk: LongKnotDiagram) -> list[tuple[int, int]]:
    """Walk positions of the first and second visit per crossing list index."""
    pos: list[list[int]] = [[] for _ in range(lk.n)]
    for k, (ci, _) in enumerate(_walk(lk)):
        pos[ci].append(k)
    return [(a, b) for a, b in pos]


def visit_sequence(lk: LongKnotDiagram) -> tuple[Visit, ...]:
    return tuple(Visit(lk.crossing_order[ci], over) for ci, over in _walk(lk))


def sign_data(lk: LongKnotDiagram) -> SignData:
    n = lk.n
    sigma = [0] * n
    dvec = [0] * n
    first_seen = [False] * n
    for ci, over in _walk(lk):
        num = lk.crossing_order[ci] - 1
        if not first_seen[ci]:
            first_seen[ci] = True
            dvec[num] = 1 if over else -1
    for ci in range(n):
        sigma[lk.crossing_order[ci] - 1] = lk.diagram.sign(ci)
    svec = tuple(s * d for s, d in zip(sigma, dvec))
    return SignData(tuple(sigma), tuple(dvec), svec)


def span_edges(lk: LongKnotDiagram, j: int) -> frozenset[int]:
    """Edges walked strictly between the two visits to crossing number ``j``."""
    if not 1 <= j <= lk.n:
        raise ValueError(f"crossing {j} out of range 1..{lk.n}")
    first, second = _visit_positions(lk)[lk.index_of[j]]
    m = lk.diagram.edge_count
    return frozenset((lk.basepoint_edge + k) % m for k in range(first + 1, second + 1))


def traversal_matrix(lk: LongKnotDiagram) -> IntMatrix:
    """``T[i][j] = 1`` iff the span of crossing ``i+1`` passes under crossing ``j+1``."""
    n = lk.n
    walk = _walk(lk)
    t = [[0] * n for _ in range(n)]
    for ci, (first, second) in enumerate(_visit_positions(lk)):
        row = t[lk.crossing_order[ci] - 1]
        for k in range(first + 1, second):
            cj, over = walk[k]
            if not over:
                row[lk.crossing_order[cj] - 1] = 1
    return tuple(tuple(r) for r in t)


@lru_cache(maxsize=256)
def _face_data(lk: LongKnotDiagram) -> tuple[FaceSet, dict[tuple[int, int], int]]:
    d = lk.diagram
    if lk.n == 0:
        # the bare line: one face on each side
        return FaceSet(((), ()), (0, 1), ()), {}
    cycles = _face_cycles(d.crossings)
    if len(cycles) != lk.n + 2:
        raise RuntimeError(
            f"corrupt diagram map: {len(cycles)} faces for {lk.n} crossings"
        )
    face_of = {corner: fi for fi, cyc in enumerate(cycles) for corner in cyc}
    ci, port = d.head(lk.basepoint_edge)
    unbounded = (face_of[(ci, port)], face_of[(ci, (port - 1) % 4)])
    bounded = tuple(face_of[(lk.index_of[c], q)] for c, q in lk.region_order)
    faces_out = tuple(
        tuple((lk.crossing_order[c], q) for c, q in cyc) for cyc in cycles
    )
    return FaceSet(faces_out, unbounded, bounded), face_of


def faces(lk: LongKnotDiagram) -> FaceSet:
    return _face_data(lk)[0]


def _edge_sides(lk: LongKnotDiagram, face_of) -> list[tuple[int, int]]:
    """``(right face, left face)`` of each edge, looking along its orientation.

    Arriving at port ``p`` the face on the right is corner ``p`` and the one on
    the left is corner ``p - 1``.
    """
    d = lk.diagram
    sides = []
    for e in range(d.edge_count):
        ci, port = d.head(e)
        sides.append((face_of[(ci, port)], face_of[(ci, (port - 1) % 4)]))
    return sides


def region_adjacency(lk: LongKnotDiagram) -> frozenset[frozenset[int]]:
    """Pairs of full-matrix column indices whose regions share an edge."""
    fs, face_of = _face_data(lk)
    col_of = {fi: c for c, fi in enumerate(fs.column_order)}
    return frozenset(
        frozenset((col_of[r], col_of[l])) for r, l in _edge_sides(lk, face_of)
    )


# Corner markings per quadrant. In the local frame the under-strand runs
# S -> N and corners 0..3 are SE, NE, NW, SW.
#
# modified scheme, read along the over-strand: -x then x on its right, 1 then
# -1 on its left.
#   positive (over W -> E): right-before SW=-x, right-after SE=x,
#                           left-before NW=1,  left-after NE=-1
#   negative (over E -> W): right-before NE=-x, right-after NW=x,
#                           left-before SE=1,  left-after SW=-1
# classical scheme, read along the under-strand: -x then x on its left, 1 then
# -1 on its right; the same for both signs:
#   left-before SW=-x, left-after NW=x, right-before SE=1, right-after NE=-1
_MARKINGS = {
    ("modified", 1): (X, LaurentPoly.constant(-1), LaurentPoly.constant(1), -X),
    ("modified", -1): (LaurentPoly.constant(1), -X, X, LaurentPoly.constant(-1)),
    ("classical", 1): (LaurentPoly.constant(1), LaurentPoly.constant(-1), X, -X),
    ("classical", -1): (LaurentPoly.constant(1), LaurentPoly.constant(-1), X, -X),
}


def full_alexander_matrix(lk: LongKnotDiagram, scheme: Scheme = "modified") -> LaurentMatrix:
    """Crossing-by-region markings over all ``n + 2`` regions.

    Columns ``0..n-1`` are bounded regions 1..n; columns ``n`` and ``n + 1``
    are the unbounded faces right and left of the basepoint edge. Markings of
    one crossing that land in the same region are added.
    """
    if scheme not in ("modified", "classical"):
        raise ValueError(f"unknown marking scheme {scheme!r}")
    fs, face_of = _face_data(lk)
    n = lk.n
    col_of = {fi: c for c, fi in enumerate(fs.column_order)}
    rows = [[LaurentPoly() for _ in range(n + 2)] for _ in range(n)]
    for ci in range(n):
        marks = _MARKINGS[(scheme, lk.diagram.sign(ci))]
        row = rows[lk.crossing_order[ci] - 1]
        for q in range(4):
            col = col_of[face_of[(ci, q)]]
            row[col] = row[col] + marks[q]
    return LaurentMatrix(rows, n + 2)


def alexander_matrix(lk: LongKnotDiagram, scheme: Scheme = "modified") -> LaurentMatrix:
    """The ``n x n`` incidence matrix on bounded regions."""
    n = lk.n
    return full_alexander_matrix(lk, scheme).delete_columns((n, n + 1))


def alexander_minor(
    lk: LongKnotDiagram, columns: tuple[int, int], scheme: Scheme = "modified"
) -> LaurentMatrix:
    """Full matrix with two adjacent-region columns removed."""
    a, b = columns
    if a == b or frozenset((a, b)) not in region_adjacency(lk):
        raise NonAdjacentRegionsError(f"columns {a} and {b} are not adjacent regions")
    return full_alexander_matrix(lk, scheme).delete_columns(columns)


def _face_windings(lk: LongKnotDiagram, j: int, face_of, fs: FaceSet) -> list[int]:
    span = span_edges(lk, j)
    sides = _edge_sides(lk, face_of)
    nfaces = len(fs.faces)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(nfaces)]
    for e, (right, left) in enumerate(sides):
        # a span edge seen left-to-right from a ray leaving the region on its
        # right, so the right side counts one more
        step = 1 if e in span else 0
        adj[left].append((right, step))
        adj[right].append((left, -step))
    wind: list[int | None] = [None] * nfaces
    start = fs.unbounded[0]
    wind[start] = 0
    queue = deque([start])
    while queue:
        f = queue.popleft()
        for g, step in adj[f]:
            if wind[g] is None:
                wind[g] = wind[f] + step
                queue.append(g)
    for e, (right, left) in enumerate(sides):
        step = 1 if e in span else 0
        if wind[right] - wind[left] != step:
            raise InconsistentWindingError(
                f"span {j}: edge {e} separates windings {wind[left]} and {wind[right]}"
            )
    if wind[fs.unbounded[1]] != 0:
        raise InconsistentWindingError(f"span {j}: unbounded faces disagree")
    return wind


def winding_matrix(lk: LongKnotDiagram) -> IntMatrix:
    """``W[i][j]`` is the winding number of region ``i+1`` around the span of crossing ``j+1``."""
    n = lk.n
    if n == 0:
        return ()
    fs, face_of = _face_data(lk)
    cols = [_face_windings(lk, j, face_of, fs) for j in range(1, n + 1)]
    return tuple(tuple(cols[j][fs.bounded_order[i]] for j in range(n)) for i in range(n))


def face_windings(lk: LongKnotDiagram, j: int) -> dict[int, int]:
    """Winding number of every face (by face index) around the span of crossing ``j``."""
    fs, face_of = _face_data(lk)
    return dict(enumerate(_face_windings(lk, j, face_of, fs)))
