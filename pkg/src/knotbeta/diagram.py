"""Knot diagrams as planar combinatorial maps.

A crossing is a quadruple ``(a, b, c, d)`` of edge labels listed
counterclockwise starting at the incoming under-strand, so ``a -> c`` is the
under-strand and ``b``/``d`` carry the over-strand. The crossing is positive
when the over-strand runs ``d -> b`` and negative when it runs ``b -> d``.

Corner (quadrant) ``q`` of a crossing is the angular sector between ports ``q``
and ``q + 1`` (mod 4), so the four corners sit SE, NE, NW, SW of a crossing
whose under-strand runs south to north.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from collections.abc import Sequence

__all__ = [
    "BraidWord",
    "ClosedDiagram",
    "DiagramError",
    "DiagramSyntaxError",
    "DiagramValidationError",
    "LongKnotDiagram",
    "from_braid",
    "make_long",
    "parse_braid",
    "parse_long_pd",
    "parse_pd",
    "render_braid",
    "render_pd",
    "validate",
]

Quad = tuple[int, int, int, int]
Slot = tuple[int, int]  # (crossing list index, port position 0..3)
Corner = tuple[int, int]  # (crossing number 1..n, quadrant 0..3)


class DiagramError(ValueError):
    pass


class DiagramSyntaxError(DiagramError):
    def __init__(self, message: str, position: int, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.position = position
        self.line = line
        self.column = column


class DiagramValidationError(DiagramError):
    def __init__(self, diagnostics: Sequence[str]):
        super().__init__("; ".join(diagnostics))
        self.diagnostics = list(diagnostics)


# ---------------------------------------------------------------------------
# low-level tracing shared by validation and canonicalisation


def _slot_table(crossings: Sequence[Quad]) -> dict[int, list[Slot]]:
    table: dict[int, list[Slot]] = {}
    for ci, quad in enumerate(crossings):
        for pos, label in enumerate(quad):
            table.setdefault(label, []).append((ci, pos))
    return table


def _other_slot(table: dict[int, list[Slot]], label: int, slot: Slot) -> Slot:
    a, b = table[label]
    return b if a == slot else a


def _trace(crossings: Sequence[Quad]) -> tuple[list[list[tuple[int, Slot, Slot]]], list[str]]:
    """Walk every component through the crossings.

    Assumes each label occurs exactly twice. Returns the components as lists of
    ``(label, tail_slot, head_slot)`` in walking order plus orientation
    diagnostics. A component is anchored at an incoming under-strand port when
    it has one, which fixes its direction.
    """
    table = _slot_table(crossings)
    seen: set[Slot] = set()
    components = []
    problems = []
    anchors = [(ci, 0) for ci in range(len(crossings))]
    anchors += [(ci, p) for ci in range(len(crossings)) for p in (1, 2, 3)]
    for start in anchors:
        if start in seen:
            continue
        comp = []
        head = start
        label = crossings[head[0]][head[1]]
        while True:
            tail = _other_slot(table, label, head)
            seen.add(head)
            seen.add(tail)
            comp.append((label, tail, head))
            if head[1] == 2:
                problems.append(
                    f"orientation inconsistency: edge {label} enters crossing "
                    f"{head[0]} on its outgoing under-strand port"
                )
            if tail[1] == 0:
                problems.append(
                    f"orientation inconsistency: edge {label} leaves crossing "
                    f"{tail[0]} on its incoming under-strand port"
                )
            exit_slot = (head[0], (head[1] + 2) % 4)
            label = crossings[exit_slot[0]][exit_slot[1]]
            head = _other_slot(table, label, exit_slot)
            if head == start:
                break
        components.append(comp)
    return components, problems


def _face_cycles(crossings: Sequence[Quad]) -> list[list[Slot]]:
    """Faces of the combinatorial map as cycles of corners ``(index, quadrant)``.

    Leaving corner ``q`` along port ``q + 1`` keeps the face on the right; it
    reappears at the far end in the corner just counterclockwise of the
    arrival port.
    """
    table = _slot_table(crossings)
    seen: set[Slot] = set()
    faces = []
    for ci in range(len(crossings)):
        for q in range(4):
            if (ci, q) in seen:
                continue
            face = []
            corner = (ci, q)
            while corner not in seen:
                seen.add(corner)
                face.append(corner)
                port = (corner[0], (corner[1] + 1) % 4)
                label = crossings[port[0]][port[1]]
                corner = _other_slot(table, label, port)
            faces.append(face)
    return faces


def _diagnose(crossings: Sequence[Quad], *, check_range: bool) -> list[str]:
    diags = []
    n = len(crossings)
    table = _slot_table(crossings)
    for label in sorted(table):
        if label < 0:
            diags.append(f"edge {label} is negative")
        mult = len(table[label])
        if mult != 2:
            diags.append(f"edge {label} multiplicity {mult}")
    if check_range and not diags and set(table) != set(range(2 * n)):
        diags.append(f"edge labels are not exactly 0..{2 * n - 1}")
    if diags or n == 0:
        return diags
    components, problems = _trace(crossings)
    diags.extend(problems)
    if len(components) != 1:
        diags.append(f"{len(components)} components")
        return diags
    nfaces = len(_face_cycles(crossings))
    if nfaces != n + 2:
        diags.append(f"{nfaces} faces, expected {n + 2}: diagram is not planar")
    return diags


# ---------------------------------------------------------------------------
# diagram types


@dataclass(frozen=True)
class ClosedDiagram:
    """Oriented knot diagram given by its crossing quadruples.

    Instances built by :func:`parse_pd` or :func:`from_braid` are validated and
    canonically labelled: edge ``e`` is followed by edge ``e + 1`` (mod ``2n``).
    Use :func:`validate` on hand-built instances.
    """

    crossings: tuple[Quad, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(v) for v in q) for q in self.crossings))
        if any(len(q) != 4 for q in self.crossings):
            raise DiagramError("every crossing needs exactly four edge labels")

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    @cached_property
    def _orientation(self) -> tuple[tuple[Slot, ...], tuple[Slot, ...]]:
        if self.n == 0:
            return (), ()
        (comp,), _ = _trace(self.crossings)
        tails = [None] * self.edge_count
        heads = [None] * self.edge_count
        for label, tail, head in comp:
            tails[label] = tail
            heads[label] = head
        return tuple(tails), tuple(heads)

    def head(self, edge: int) -> Slot:
        """Slot ``(crossing index, port)`` where ``edge`` enters a crossing."""
        return self._orientation[1][edge]

    def tail(self, edge: int) -> Slot:
        """Slot where ``edge`` leaves a crossing."""
        return self._orientation[0][edge]

    def sign(self, index: int) -> int:
        """Crossing sign: +1 if the over-strand enters at port 3 (d -> b)."""
        d_label = self.crossings[index][3]
        return 1 if self.head(d_label) == (index, 3) else -1

    def mirror(self) -> ClosedDiagram:
        """Mirror image: same shadow with every crossing switched.

        Rotating each quadruple one step keeps the labels counterclockwise but
        starts at the old incoming over-strand, which becomes the new under-strand.
        """
        out = []
        for ci, (a, b, c, d) in enumerate(self.crossings):
            out.append((d, a, b, c) if self.sign(ci) > 0 else (b, c, d, a))
        return ClosedDiagram(tuple(out))


@dataclass(frozen=True)
class LongKnotDiagram:
    """A closed diagram cut open at ``basepoint_edge``.

    ``crossing_order[i]`` is the number (1..n) of the crossing stored at list
    index ``i``. ``region_order[k]`` is a corner ``(crossing number, quadrant)``
    lying in bounded region ``k + 1``.
    """

    diagram: ClosedDiagram
    basepoint_edge: int = 0
    crossing_order: tuple[int, ...] = ()
    region_order: tuple[Corner, ...] = ()

    @property
    def n(self) -> int:
        return self.diagram.n

    @cached_property
    def index_of(self) -> dict[int, int]:
        """Crossing number -> list index."""
        return {num: i for i, num in enumerate(self.crossing_order)}


@dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(v) for v in self.letters))
        if self.strand_count < 1:
            raise DiagramError("strand_count must be positive")
        for v in self.letters:
            if v == 0 or abs(v) >= self.strand_count:
                raise DiagramError(
                    f"generator {v} out of range for {self.strand_count} strands"
                )


# ---------------------------------------------------------------------------
# operations


def validate(d: ClosedDiagram) -> list[str]:
    """Diagnostics for ``d``; empty iff it is a valid single-component planar diagram."""
    return _diagnose(d.crossings, check_range=True)


def _canonicalize(crossings: Sequence[Quad]) -> tuple[ClosedDiagram, dict[int, int]]:
    """Relabel edges 0..2n-1 along the orientation from the smallest label."""
    if not crossings:
        return ClosedDiagram(()), {}
    (comp,), _ = _trace(crossings)
    start = min(range(len(comp)), key=lambda k: comp[k][0])
    comp = comp[start:] + comp[:start]
    relabel = {label: new for new, (label, _, _) in enumerate(comp)}
    quads = tuple(tuple(relabel[v] for v in q) for q in crossings)
    return ClosedDiagram(quads), relabel


_PD_TERM = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")
_TOKEN_SPLIT = re.compile(r"[\s,;]+")


def _location(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _syntax_error(text: str, pos: int, msg: str) -> DiagramSyntaxError:
    line, col = _location(text, pos)
    return DiagramSyntaxError(msg, pos, line, col)


@dataclass
class _PDDocument:
    crossings: list[Quad]
    basepoint: int | None = None
    numbering_listed: bool = False
    regions: dict[int, tuple[int, int]] = field(default_factory=dict)


def _scan_pd(text: str) -> _PDDocument:
    doc = _PDDocument([])
    offset = 0
    for raw in text.splitlines(keepends=True):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        words = stripped.split()
        lead = len(line) - len(line.lstrip())
        if words and words[0] == "basepoint":
            if len(words) != 2 or not words[1].isdigit():
                raise _syntax_error(text, offset + lead, "expected 'basepoint <edge>'")
            doc.basepoint = int(words[1])
        elif words and words[0] == "numbering":
            if words[1:] != ["listed"]:
                raise _syntax_error(text, offset + lead, "expected 'numbering listed'")
            doc.numbering_listed = True
        elif words and words[0] == "region":
            if len(words) != 4 or not all(w.isdigit() for w in words[1:]):
                raise _syntax_error(
                    text, offset + lead, "expected 'region <k> <crossing> <quadrant>'"
                )
            k, c, q = map(int, words[1:])
            doc.regions[k] = (c, q)
        else:
            pos = 0
            while pos < len(line):
                if line[pos].isspace() or line[pos] == ",":
                    pos += 1
                    continue
                m = _PD_TERM.match(line, pos)
                if not m:
                    raise _syntax_error(text, offset + pos, "expected X(a,b,c,d)")
                doc.crossings.append(tuple(int(g) for g in m.groups()))
                pos = m.end()
        offset += len(raw)
    return doc


def parse_pd(text: str) -> ClosedDiagram:
    """Parse ``X(a,b,c,d)`` terms into a validated, canonically labelled diagram.

    Directive lines (``basepoint``, ``numbering``, ``region``) are accepted and
    ignored here; :func:`parse_long_pd` honours them.
    """
    doc = _scan_pd(text)
    diags = _diagnose(doc.crossings, check_range=False)
    if diags:
        raise DiagramValidationError(diags)
    diagram, _ = _canonicalize(doc.crossings)
    return diagram


def parse_long_pd(text: str) -> LongKnotDiagram:
    """Parse a PD document into a long knot, honouring its directives.

    ``basepoint E`` names the cut edge by its label in the file (default: the
    smallest label). ``numbering listed`` numbers crossings in file order
    instead of first-visit order. ``region K C Q`` puts corner ``Q`` of
    crossing number ``C`` into bounded region ``K``; when present, every
    region 1..n must be given.
    """
    doc = _scan_pd(text)
    diags = _diagnose(doc.crossings, check_range=False)
    if diags:
        raise DiagramValidationError(diags)
    diagram, relabel = _canonicalize(doc.crossings)
    basepoint = 0
    if doc.basepoint is not None:
        if doc.basepoint not in relabel:
            raise DiagramValidationError([f"basepoint edge {doc.basepoint} is not an edge"])
        basepoint = relabel[doc.basepoint]
    order = tuple(range(1, diagram.n + 1)) if doc.numbering_listed else None
    regions = None
    if doc.regions:
        if sorted(doc.regions) != list(range(1, diagram.n + 1)):
            raise DiagramValidationError(
                [f"region lines must number exactly 1..{diagram.n}"]
            )
        regions = tuple(doc.regions[k] for k in sorted(doc.regions))
    return make_long(diagram, basepoint, crossing_order=order, region_order=regions)


def render_pd(d: ClosedDiagram | LongKnotDiagram) -> str:
    """Serialise to PD text; long knots also carry their directives."""
    if isinstance(d, LongKnotDiagram):
        lk = d
        lines = [f"basepoint {lk.basepoint_edge}", "numbering listed"]
        by_number = sorted(range(lk.n), key=lambda i: lk.crossing_order[i])
        lines += [_quad_text(lk.diagram.crossings[i]) for i in by_number]
        lines += [f"region {k + 1} {c} {q}" for k, (c, q) in enumerate(lk.region_order)]
        return "\n".join(lines) + "\n"
    return " ".join(_quad_text(q) for q in d.crossings)


def _quad_text(q: Quad) -> str:
    return "X({},{},{},{})".format(*q)


def parse_braid(text: str) -> BraidWord:
    """Parse ``strands N`` followed by letters ``sK``, ``sK^-1``, ``K`` or ``-K``."""
    tokens = [t for t in _TOKEN_SPLIT.split(text.split("#", 1)[0].strip()) if t]
    strands = None
    letters = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok == "strands":
            if i + 1 >= len(tokens) or not tokens[i + 1].isdigit():
                raise _syntax_error(text, text.find(tok), "expected 'strands N'")
            strands = int(tokens[i + 1])
            i += 2
            continue
        m = re.fullmatch(r"s(\d+)(\^-1|\^\(-1\))?|(-?\d+)", tok)
        if not m:
            raise _syntax_error(text, max(text.find(tok), 0), f"bad braid letter {tok!r}")
        if m.group(1):
            v = int(m.group(1))
            letters.append(-v if m.group(2) else v)
        else:
            letters.append(int(m.group(3)))
        i += 1
    if strands is None:
        strands = max((abs(v) for v in letters), default=0) + 1
    return BraidWord(strands, tuple(letters))


def render_braid(word: BraidWord) -> str:
    body = " ".join(f"s{v}" if v > 0 else f"s{-v}^-1" for v in word.letters)
    return f"strands {word.strand_count}\n{body}\n"


def _braid_components(word: BraidWord) -> int:
    perm = list(range(word.strand_count))
    for v in word.letters:
        i = abs(v) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen = set()
    count = 0
    for s in range(word.strand_count):
        if s not in seen:
            count += 1
            while s not in seen:
                seen.add(s)
                s = perm[s]
    return count


def from_braid(word: BraidWord) -> ClosedDiagram:
    """Closure of a braid with strands running upward.

    Positive ``sK`` has the strand from the lower-left on top, which is a
    positive crossing.
    """
    ncomp = _braid_components(word)
    if ncomp != 1:
        raise DiagramValidationError(
            [f"{ncomp} components: braid closure is a link, not a knot"]
        )
    m = word.strand_count
    current = list(range(m))
    fresh = m
    raw = []
    for v in word.letters:
        i = abs(v) - 1
        in_l, in_r = current[i], current[i + 1]
        out_l, out_r = fresh, fresh + 1
        fresh += 2
        if v > 0:
            # under runs SE -> NW, over SW -> NE
            raw.append((in_r, out_r, out_l, in_l))
        else:
            # under runs SW -> NE, over SE -> NW
            raw.append((in_l, in_r, out_r, out_l))
        current[i], current[i + 1] = out_l, out_r
    closing = {current[p]: p for p in range(m)}
    quads = [tuple(closing.get(v, v) for v in q) for q in raw]
    if not quads:
        return ClosedDiagram(())
    diags = _diagnose(quads, check_range=False)
    if diags:
        raise DiagramValidationError(diags)
    diagram, _ = _canonicalize(quads)
    return diagram


def _first_visit_order(d: ClosedDiagram, basepoint: int) -> tuple[int, ...]:
    order = [0] * d.n
    count = 0
    for k in range(d.edge_count):
        ci = d.head((basepoint + k) % d.edge_count)[0]
        if not order[ci]:
            count += 1
            order[ci] = count
    return tuple(order)


def make_long(
    d: ClosedDiagram,
    basepoint: int = 0,
    *,
    crossing_order: Sequence[int] | None = None,
    region_order: Sequence[Corner] | None = None,
) -> LongKnotDiagram:
    """Cut ``d`` open at ``basepoint``.

    Crossings default to first-visit numbering from the basepoint. Bounded
    regions default to the order in which their corners first appear when
    corners are listed by (crossing number, quadrant).
    """
    if d.n == 0:
        if basepoint != 0:
            raise DiagramError(f"invalid basepoint edge {basepoint}")
        return LongKnotDiagram(d, 0, (), ())
    if not 0 <= basepoint < d.edge_count:
        raise DiagramError(f"invalid basepoint edge {basepoint}")

    if crossing_order is None:
        order = _first_visit_order(d, basepoint)
    else:
        order = tuple(int(v) for v in crossing_order)
        if sorted(order) != list(range(1, d.n + 1)):
            raise DiagramError("crossing_order must be a permutation of 1..n")

    index_of = {num: i for i, num in enumerate(order)}
    faces = _face_cycles(d.crossings)
    face_of = {corner: fi for fi, face in enumerate(faces) for corner in face}
    head = d.head(basepoint)
    unbounded = {face_of[head], face_of[(head[0], (head[1] - 1) % 4)]}

    if region_order is None:
        chosen: list[Corner] = []
        taken = set(unbounded)
        for num in range(1, d.n + 1):
            for q in range(4):
                fi = face_of[(index_of[num], q)]
                if fi not in taken:
                    taken.add(fi)
                    chosen.append((num, q))
        regions = tuple(chosen)
    else:
        regions = tuple((int(c), int(q)) for c, q in region_order)
        if len(regions) != d.n:
            raise DiagramError(f"region_order needs {d.n} entries")
        picked = []
        for c, q in regions:
            if c not in index_of or not 0 <= q < 4:
                raise DiagramError(f"no corner {q} at crossing {c}")
            picked.append(face_of[(index_of[c], q)])
        if len(set(picked)) != d.n or unbounded & set(picked):
            raise DiagramError("region_order must pick each bounded region exactly once")
    return LongKnotDiagram(d, basepoint, order, regions)
