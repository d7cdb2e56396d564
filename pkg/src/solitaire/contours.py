"""Contours of patterns on Z^2: bi-invariant orders, sweep swaps, S-hulls.

A corner of a shape is a vertex of its convex hull, equivalently a maximal
element under some bi-invariant total order (represented here as a cascade
of integer direction vectors compared by dot product).  The contour of a
pattern with respect to a corner generalises the line of the triangle and
the L-shape of the square; all contours of a filling-closed pattern are in
one solitaire orbit, via sweep swaps and the parallel-edge exchange.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from .core import MoveRecord, Pattern, Shape, fill_of, replay
from .groups import Element, GroupContext

Cell = Tuple[int, int]


def convex_hull(points: Iterable[Cell]) -> List[Cell]:
    """Hull vertices in counter-clockwise order (monotone chain, exact)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: List[Cell] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Cell] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def corners(S: Iterable[Cell]) -> Set[Cell]:
    """The corners of a planar shape: exactly its convex hull vertices."""
    S = set(S)
    if not S:
        raise ValueError("empty shape has no corners")
    return set(convex_hull(S))


def hull_edges(S: Iterable[Cell]) -> List[Tuple[Cell, Cell]]:
    hull = convex_hull(S)
    if len(hull) < 2:
        return []
    if len(hull) == 2:
        return [(hull[0], hull[1])]
    return [(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))]


@dataclass(frozen=True)
class BiInvariantOrder:
    """Lexicographic cascade of dot products with integer stage vectors."""

    stages: Tuple[Cell, ...]

    def key(self, x: Cell):
        return tuple(x[0] * v[0] + x[1] * v[1] for v in self.stages)

    def max_of(self, cells: Iterable[Cell]) -> Cell:
        return max(cells, key=self.key)

    def min_of(self, cells: Iterable[Cell]) -> Cell:
        return min(cells, key=self.key)

    def to_json(self) -> dict:
        return {"stages": [list(v) for v in self.stages]}

    @staticmethod
    def from_json(data: dict) -> "BiInvariantOrder":
        return BiInvariantOrder(tuple(tuple(v) for v in data["stages"]))


def _primitive(v: Cell) -> Cell:
    g = gcd(abs(v[0]), abs(v[1]))
    return (v[0] // g, v[1] // g) if g else v


def order_extremizing(
    S: Iterable[Cell], c_min: Cell, c_max: Cell
) -> Optional[BiInvariantOrder]:
    """An order on Z^2 whose min over S is c_min and max is c_max, if any.

    Searches primary directions among the primitive integer vectors up to
    the diameter of S; ties are broken by a perpendicular second stage.
    Existence for some direction is exactly sweep swappability.
    """
    S = list(set(S))
    span = max(
        max(abs(a[0] - b[0]), abs(a[1] - b[1])) for a in S for b in S
    )
    bound = max(2 * span + 1, 2)
    seen = set()
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if (a, b) == (0, 0):
                continue
            v = _primitive((a, b))
            if v in seen:
                continue
            seen.add(v)
            for w in ((-v[1], v[0]), (v[1], -v[0])):
                order = BiInvariantOrder((v, w))
                if order.max_of(S) == c_max and order.min_of(S) == c_min:
                    return order
    return None


def contour(ctx: GroupContext, shape: Shape, P: Pattern, c: Element) -> Pattern:
    """{x in P : x c^-1 S is not contained in P} for a corner c of S."""
    if ctx.kind == "Zd" and c not in corners(shape.S):
        raise ValueError(f"{c} is not a corner of the shape")
    c_inv = ctx.inverse(c)
    out = set()
    for x in P:
        base = ctx.multiply(x, c_inv)
        if any(ctx.multiply(base, s) not in P for s in shape.S):
            out.add(x)
    return frozenset(out)


def _inner_translates(ctx: GroupContext, shape: Shape, P: Pattern) -> List[Element]:
    """All g with gS inside P (enumerated from P itself)."""
    seen = set()
    out = []
    any_inv = ctx.inverse(next(iter(shape.S)))
    for p in P:
        g = ctx.multiply(p, any_inv)
        if g in seen:
            continue
        seen.add(g)
        if all(ctx.multiply(g, s) in P for s in shape.S):
            out.append(g)
    return out


def sweep_swap(
    ctx: GroupContext,
    shape: Shape,
    P: Pattern,
    c_min: Element,
    c_max: Element,
    order: BiInvariantOrder,
) -> List[MoveRecord]:
    """Single-pass trace from contour(P, c_min) to contour(P, c_max).

    Requires a bi-invariant order realising c_min = min S, c_max = max S;
    translates with a full window inside P are processed in ascending order
    and each move lifts the hole from the min corner to the max corner.
    """
    if order.min_of(shape.S) != c_min or order.max_of(shape.S) != c_max:
        raise ValueError("not sweep swappable under this order")
    start = contour(ctx, shape, P, c_min)
    target = contour(ctx, shape, P, c_max)
    inner = sorted(_inner_translates(ctx, shape, P), key=order.key, reverse=True)
    # At each window the single hole sits at the min corner; the marble at
    # the max corner drops into it, so the hole migrates min -> max.
    moves = [
        MoveRecord(g, ctx.multiply(g, c_max), ctx.multiply(g, c_min))
        for g in inner
    ]
    end = replay(ctx, shape, start, moves)
    if end != target:
        raise AssertionError("sweep swap endpoint is not the target contour")
    return moves


def parallel_edge_exchange(
    ctx: GroupContext,
    shape: Shape,
    P: Pattern,
    c: Element,
    c_other: Element,
) -> List[MoveRecord]:
    """Trace between contours at same-side endpoints of two parallel edges.

    Processes rows of inner translates from the far side of the c-edge
    inward; each row gets a forward pass dropping the far corner marble to
    the near corner, then a backward pass sliding the leftover along.
    """
    pair = _parallel_edge_pair(shape.S, c, c_other)
    if pair is None:
        raise ValueError("corners are not same-side endpoints of parallel edges")
    b_other = pair
    d = (b_other[0] - c_other[0], b_other[1] - c_other[1])
    # Outward normal of the edge through c_other (the far edge from c).
    hull = convex_hull(shape.S)
    n = _outward_normal(hull, c_other, b_other)
    start = contour(ctx, shape, P, c)
    target = contour(ctx, shape, P, c_other)
    inner = _inner_translates(ctx, shape, P)
    rows: dict = {}
    for g in inner:
        rows.setdefault(g[0] * n[0] + g[1] * n[1], []).append(g)
    moves: List[MoveRecord] = []
    for level in sorted(rows, reverse=True):
        row = sorted(rows[level], key=lambda g: g[0] * d[0] + g[1] * d[1])
        for g in reversed(row):
            moves.append(MoveRecord(g, ctx.multiply(g, b_other), ctx.multiply(g, c)))
        for g in row:
            moves.append(MoveRecord(g, ctx.multiply(g, c_other), ctx.multiply(g, b_other)))
    end = replay(ctx, shape, start, moves)
    if end != target:
        raise AssertionError("parallel edge exchange missed the target contour")
    return moves


def _parallel_edge_pair(S, c: Cell, c_other: Cell) -> Optional[Cell]:
    """The far endpoint b' of c_other's edge when it is parallel to c's."""
    edges = hull_edges(S)
    for e in edges:
        if c not in e:
            continue
        de = (e[1][0] - e[0][0], e[1][1] - e[0][1])
        for f in edges:
            if f is e or c_other not in f:
                continue
            df = (f[1][0] - f[0][0], f[1][1] - f[0][1])
            if de[0] * df[1] - de[1] * df[0] != 0:
                continue
            b_other = f[1] if f[0] == c_other else f[0]
            b = e[1] if e[0] == c else e[0]
            # Same side: c - b and c_other - b_other point the same way.
            u = (c[0] - b[0], c[1] - b[1])
            w = (c_other[0] - b_other[0], c_other[1] - b_other[1])
            if u[0] * w[0] + u[1] * w[1] > 0:
                return b_other
    return None


def _outward_normal(hull: Sequence[Cell], a: Cell, b: Cell) -> Cell:
    """Outward normal of hull edge {a, b} (hull given counter-clockwise)."""
    for i in range(len(hull)):
        p, q = hull[i], hull[(i + 1) % len(hull)]
        if {p, q} == {a, b}:
            d = (q[0] - p[0], q[1] - p[1])
            return _primitive((d[1], -d[0]))
    raise ValueError(f"{a}-{b} is not a hull edge")


def s_hull(shape: Shape, P: Iterable[Cell]) -> Pattern:
    """Smallest lattice region with the shape's edge directions containing P.

    Intersects the half-planes obtained by sliding each hull edge of S as
    close to P as possible.  Contains the filling closure of P.
    """
    P = set(P)
    if not P:
        return frozenset()
    hull = convex_hull(shape.S)
    if len(hull) < 3:
        raise ValueError("S-hull needs a non-linear shape")
    constraints = []
    for i in range(len(hull)):
        p, q = hull[i], hull[(i + 1) % len(hull)]
        n = _primitive((q[1] - p[1], -(q[0] - p[0])))
        r = max(x[0] * n[0] + x[1] * n[1] for x in P)
        constraints.append((n, r))
    # Bounding box from the vertices of the constraint polygon.
    xs: List[Fraction] = []
    ys: List[Fraction] = []
    m = len(constraints)
    for i in range(m):
        (a1, b1), r1 = constraints[i]
        for j in range(i + 1, m):
            (a2, b2), r2 = constraints[j]
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            x = Fraction(r1 * b2 - r2 * b1, det)
            y = Fraction(a1 * r2 - a2 * r1, det)
            if all(a * x + b * y <= r for (a, b), r in constraints):
                xs.append(x)
                ys.append(y)
    if not xs:
        raise ValueError("degenerate S-hull")
    out = set()
    for x in range(int(min(xs)) - 1, int(max(xs)) + 2):
        for y in range(int(min(ys)) - 1, int(max(ys)) + 2):
            if all(a * x + b * y <= r for (a, b), r in constraints):
                out.add((x, y))
    return frozenset(out)
