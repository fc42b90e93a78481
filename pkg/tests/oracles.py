"""Independent reference computations used only by the tests."""

from __future__ import annotations

import sympy

from knotbeta.laurent import LaurentPoly


def cofactor_det(rows):
    """Laplace expansion along the first row."""
    n = len(rows)
    if n == 0:
        return LaurentPoly.constant(1)
    if n == 1:
        return rows[0][0]
    total = LaurentPoly()
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def wirtinger_alexander(crossings):
    """Alexander polynomial from Fox derivatives of the Wirtinger presentation.

    Takes raw PD quadruples (counterclockwise from the incoming under-strand),
    finds the over-arcs by walking the knot, and returns the determinant of
    the Fox matrix with one row and column deleted, as a sympy expression in t.
    Shares no code with the region-marking construction.
    """
    t = sympy.Symbol("t")
    n = len(crossings)
    if n == 0:
        return sympy.Integer(1), t
    # labels appear twice; walk from an incoming under port
    slots = {}
    for ci, q in enumerate(crossings):
        for p, lab in enumerate(q):
            slots.setdefault(lab, []).append((ci, p))
    order = []
    head = (0, 0)
    lab = crossings[0][0]
    while True:
        order.append((lab, head))
        exit_slot = (head[0], (head[1] + 2) % 4)
        lab = crossings[exit_slot[0]][exit_slot[1]]
        a, b = slots[lab]
        head = b if a == exit_slot else a
        if head == (0, 0):
            break
    # an arc ends each time the walk passes under a crossing
    arc_of = {}
    arc = 0
    for lab, head in order:
        arc_of[lab] = arc
        if head[1] == 0:
            arc += 1
    narcs = arc
    # the last stretch wraps into the first arc
    for lab, head in reversed(order):
        if arc_of[lab] == narcs:
            arc_of[lab] = 0
        else:
            break
    heads = {lab: head for lab, head in order}
    m = sympy.zeros(n, max(narcs, 1))
    for ci, (a, b, c, d) in enumerate(crossings):
        k, i, j = arc_of[b], arc_of[a], arc_of[c]
        # relation x_j = x_k x_i x_k^-1 or x_k^-1 x_i x_k depending on the
        # over-strand direction; Fox derivatives abelianised (and scaled)
        positive = heads[d] == (ci, 3)
        m[ci, k] += 1 - t
        m[ci, i] += t if positive else -1
        m[ci, j] += -1 if positive else t
    minor = m[1:, 1:]
    return sympy.expand(minor.det()), t


def normalized_coeffs(expr, t):
    """Coefficient list (lowest degree first) of expr divided by its lowest power, positive constant."""
    expr = sympy.expand(expr)
    poly = sympy.Poly(sympy.expand(expr * t ** 50), t)
    terms = {m[0] - 50: int(c) for m, c in zip(poly.monoms(), poly.coeffs())}
    lo = min(terms)
    coeffs = [terms.get(k, 0) for k in range(lo, max(terms) + 1)]
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return coeffs
