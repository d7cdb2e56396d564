"""Triangle solitaire on Z^2: orbit normal forms and constructive paths.

The shape is T = {(0,0), (1,0), (0,1)}.  The filling closure of any finite
pattern is a union of non-touching triangles (touching in the triangular-
lattice sense); orbits are classified by those triangles plus the excess
count inside each one.  The canonical representative packs each component
as a bottom line of length n with k excess cells stacked in the rows above,
filled row by row from the left.

``canonical_path`` emits an explicit legal move sequence to the canonical
representative.  It builds components by absorbing cells into a growing
line (rotating the line between the three edges of its triangle as needed)
and finally fetches excess cells into their slots with interrupted edge
rotations.  Plans are generated against the component's line alone and
executed under relaxed semantics: a planned move whose target is occupied
is skipped and the roles of the two marbles swap, which never invalidates
the remainder of the plan, since extra marbles only ever stand in for the
one that failed to move.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .core import IllegalMoveError, MoveRecord, Pattern, Shape, pattern
from .groups import GroupContext

CTX = GroupContext("Zd", 2)
TRIANGLE_CELLS = frozenset({(0, 0), (1, 0), (0, 1)})
TRIANGLE = Shape.make(CTX, TRIANGLE_CELLS)

Cell = Tuple[int, int]

# 120-degree rotation of the triangular lattice (column-vector convention).
ROTATION_MATRIX = ((-1, -1), (1, 0))


@dataclass(frozen=True, order=True)
class Tri:
    """The triangle {(a,b) : a >= vx, b >= vy, a+b <= vx+vy+n-1}."""

    vx: int
    vy: int
    n: int

    @property
    def smax(self) -> int:
        return self.vx + self.vy + self.n - 1

    def contains(self, c: Cell) -> bool:
        return c[0] >= self.vx and c[1] >= self.vy and c[0] + c[1] <= self.smax

    def cells(self) -> List[Cell]:
        return [
            (self.vx + a, self.vy + b)
            for b in range(self.n)
            for a in range(self.n - b)
        ]

    def outer_corners(self) -> Set[Cell]:
        # The three strip intersections that are not lattice neighbours.
        return {
            (self.vx - 1, self.vy - 1),
            (self.vx - 1, self.vy + self.n + 1),
            (self.vx + self.n + 1, self.vy - 1),
        }

    def in_region(self, c: Cell) -> bool:
        """c lies in the triangle or its neighbourhood."""
        x, y = c
        if x < self.vx - 1 or y < self.vy - 1 or x + y > self.smax + 1:
            return False
        return c not in self.outer_corners()

    def touches(self, other: "Tri") -> bool:
        lox = max(other.vx, self.vx - 1)
        loy = max(other.vy, self.vy - 1)
        hi = min(other.smax, self.smax + 1)
        t = hi - lox - loy
        if t < 0:
            return False
        if t >= 2:
            return True
        cells = [(lox, loy)] if t == 0 else [(lox, loy), (lox + 1, loy), (lox, loy + 1)]
        bad = self.outer_corners()
        return any(c not in bad for c in cells if other.contains(c))

    def overlaps(self, other: "Tri") -> bool:
        lox = max(other.vx, self.vx)
        loy = max(other.vy, self.vy)
        return lox + loy <= min(other.smax, self.smax)

    def extend_toward(self, c: Cell) -> "Tri":
        """The filling closure of this triangle plus the neighbour cell c."""
        if c[1] == self.vy - 1:
            return Tri(self.vx, self.vy - 1, self.n + 1)
        if c[0] == self.vx - 1:
            return Tri(self.vx - 1, self.vy, self.n + 1)
        if c[0] + c[1] == self.smax + 1:
            return Tri(self.vx, self.vy, self.n + 1)
        raise ValueError(f"{c} is not a neighbour of {self}")

    def hull_merge(self, other: "Tri") -> "Tri":
        vx = min(self.vx, other.vx)
        vy = min(self.vy, other.vy)
        return Tri(vx, vy, max(self.smax, other.smax) - vx - vy + 1)


def side_of(tri: Tri, c: Cell) -> str:
    """Which edge of tri the neighbour cell c extends: 'B', 'V' or 'D'."""
    if c[1] == tri.vy - 1:
        return "B"
    if c[0] == tri.vx - 1:
        return "V"
    if c[0] + c[1] == tri.smax + 1:
        return "D"
    raise ValueError(f"{c} is not a neighbour of {tri}")


# -- fill decomposition -------------------------------------------------------


def fill_decomposition(P: Iterable[Cell]) -> List[Tri]:
    """Unique maximal non-touching triangles whose union is the filling closure."""
    comps: List[Tri] = []
    for c in sorted(set(P), key=lambda c: (c[0] + c[1], c[0])):
        if any(t.contains(c) for t in comps):
            continue
        placed = None
        for i, t in enumerate(comps):
            if t.in_region(c):
                placed = i
                break
        if placed is None:
            comps.append(Tri(c[0], c[1], 1))
        else:
            comps[placed] = comps[placed].extend_toward(c)
        # Merge cascade: hull-merging touching triangles is exactly the filling.
        merged = True
        while merged:
            merged = False
            for i in range(len(comps)):
                for j in range(i + 1, len(comps)):
                    if comps[i].touches(comps[j]) or comps[j].touches(comps[i]):
                        comps[i] = comps[i].hull_merge(comps[j])
                        del comps[j]
                        merged = True
                        break
                if merged:
                    break
    return sorted(comps)


def triangle_fill(P: Iterable[Cell]) -> Pattern:
    """φ(P) for the triangle shape, via the fill decomposition."""
    out: Set[Cell] = set()
    for t in fill_decomposition(P):
        out.update(t.cells())
    return frozenset(out)


def triangle_rank(P: Iterable[Cell]) -> int:
    return sum(t.n for t in fill_decomposition(P))


def triangle_excess(P: Iterable[Cell]) -> int:
    P = set(P)
    return len(P) - triangle_rank(P)


# -- normal forms -------------------------------------------------------------


@dataclass(frozen=True)
class TriangleNormalForm:
    """Components (v, n, k): the pattern ∪ v + P_{n,k}, sorted by anchor."""

    components: Tuple[Tuple[Cell, int, int], ...]

    def to_pattern(self) -> Pattern:
        cells: Set[Cell] = set()
        for v, n, k in self.components:
            cells.update(pnk_cells(n, k, v))
        return frozenset(cells)

    def to_json(self) -> list:
        return [
            {"v": [v[0], v[1]], "n": n, "k": k} for v, n, k in self.components
        ]


def excess_slots(n: int, v: Cell = (0, 0)) -> List[Cell]:
    """Cells of v + T_n above the bottom line, row by row, left to right."""
    vx, vy = v
    return [
        (vx + a, vy + b)
        for b in range(1, n)
        for a in range(n - b)
    ]


def pnk_cells(n: int, k: int, v: Cell = (0, 0)) -> List[Cell]:
    """The canonical pattern P_{n,k}: a line plus k stacked excess cells."""
    if not 0 <= k <= n * (n - 1) // 2:
        raise ValueError(f"need 0 <= k <= n(n-1)/2, got n={n}, k={k}")
    vx, vy = v
    line = [(vx + i, vy) for i in range(n)]
    return line + excess_slots(n, v)[:k]


def identify_orbit(P: Iterable[Cell]) -> TriangleNormalForm:
    """Algorithm: fill, decompose, count the excess inside each triangle."""
    P = set(P)
    comps = []
    for t in fill_decomposition(P):
        inside = sum(1 for c in P if t.contains(c))
        comps.append(((t.vx, t.vy), t.n, inside - t.n))
    return TriangleNormalForm(tuple(comps))


def line_cells(n: int, v: Cell = (0, 0)) -> List[Cell]:
    return [(v[0] + i, v[1]) for i in range(n)]


def line_orbit_member(P: Iterable[Cell]) -> bool:
    """True iff φ(P) is a single triangle T_{|P|} and P has no excess."""
    P = set(P)
    comps = fill_decomposition(P)
    return len(comps) == 1 and comps[0].n == len(P)


def a_n_condition(P: Iterable[Cell]) -> bool:
    """Necessary condition for line-orbit membership inside T_n, n = |P|.

    For each j, the j right-most columns of T_n hold at most j points.
    """
    P = set(P)
    n = len(P)
    tn = Tri(0, 0, n)
    if not all(tn.contains(c) for c in P):
        raise ValueError("pattern must sit inside T_n at the origin")
    for j in range(1, n + 1):
        if sum(1 for c in P if c[0] >= n - j) > j:
            return False
    return True


def stacks(n: int, kind: str):
    """The n! stack patterns of one kind inside T_n at the origin.

    kind 'row' picks one point per row, 'column' per column, 'diagonal'
    per antidiagonal.
    """
    import itertools

    if kind == "row":
        lines = [[(a, b) for a in range(n - b)] for b in range(n)]
    elif kind == "column":
        lines = [[(a, b) for b in range(n - a)] for a in range(n)]
    elif kind == "diagonal":
        lines = [[(a, s - a) for a in range(s + 1)] for s in range(n)]
    else:
        raise ValueError(f"unknown stack kind {kind!r}")
    for choice in itertools.product(*lines):
        yield frozenset(choice)


def all_stacks(n: int) -> Set[Pattern]:
    out: Set[Pattern] = set()
    for kind in ("row", "column", "diagonal"):
        out.update(stacks(n, kind))
    return out


# -- move plans ---------------------------------------------------------------


def _mv(g: Cell, a: Cell, b: Cell) -> MoveRecord:
    return MoveRecord(g, a, b)


def rotation_moves_b2d(tri: Tri) -> List[MoveRecord]:
    """Bottom line -> diagonal edge inside tri; n(n-1)/2 moves."""
    vx, vy, n = tri.vx, tri.vy, tri.n
    moves = []
    for m in range(2, n + 1):
        for i in range(m - 2, -1, -1):
            a = (vx + i, vy + m - 2 - i)
            b = (vx + i, vy + m - 1 - i)
            moves.append(_mv(a, a, b))
    return moves


def rotation_moves_v2d(tri: Tri) -> List[MoveRecord]:
    """Left (vertical) edge -> diagonal edge; the x/y mirror of b2d."""
    vx, vy, n = tri.vx, tri.vy, tri.n
    moves = []
    for m in range(2, n + 1):
        for i in range(m - 2, -1, -1):
            a = (vx + m - 2 - i, vy + i)
            b = (vx + m - 1 - i, vy + i)
            moves.append(_mv(a, a, b))
    return moves


def reverse_plan(plan: Sequence[MoveRecord]) -> List[MoveRecord]:
    return [m.reversed() for m in reversed(plan)]


def rotation_plan(tri: Tri, frm: str, to: str) -> List[MoveRecord]:
    if frm == to:
        return []
    table = {
        ("B", "D"): lambda: rotation_moves_b2d(tri),
        ("D", "B"): lambda: reverse_plan(rotation_moves_b2d(tri)),
        ("V", "D"): lambda: rotation_moves_v2d(tri),
        ("D", "V"): lambda: reverse_plan(rotation_moves_v2d(tri)),
    }
    if (frm, to) in table:
        return table[(frm, to)]()
    return rotation_plan(tri, frm, "D") + rotation_plan(tri, "D", to)


def edge_cells(tri: Tri, edge: str) -> List[Cell]:
    vx, vy, n = tri.vx, tri.vy, tri.n
    if edge == "B":
        return [(vx + i, vy) for i in range(n)]
    if edge == "V":
        return [(vx, vy + i) for i in range(n)]
    if edge == "D":
        return [(vx + i, vy + n - 1 - i) for i in range(n)]
    raise ValueError(f"unknown edge {edge!r}")


def _edge_frames(tri: Tri, edge: str):
    """(top, bottom, anchor) cell indexers for absorbing along an edge.

    top[i] are the current line cells (i = 0..n-1); bottom[i] the outer row
    (i = 0..n).  Blocks {bottom[i], bottom[i+1], top[i]} are shape translates
    anchored at anchor[i].
    """
    vx, vy, n = tri.vx, tri.vy, tri.n
    if edge == "B":
        bottom = lambda i: (vx + i, vy - 1)
        return (lambda i: (vx + i, vy)), bottom, bottom
    if edge == "V":
        bottom = lambda i: (vx - 1, vy + i)
        return (lambda i: (vx, vy + i)), bottom, bottom
    if edge == "D":
        top = lambda i: (vx + i, vy + n - 1 - i)
        return top, (lambda i: (vx + i, vy + n - i)), top
    raise ValueError(f"unknown edge {edge!r}")


def absorb_plan(tri: Tri, edge: str, cell: Cell) -> Tuple[List[MoveRecord], Tri]:
    """Extend the line on ``edge`` by one absorbed neighbour ``cell``.

    The cell must lie on the outer row of that edge; the result is the line
    occupying the same edge of the grown triangle.
    """
    top, bottom, anchor = _edge_frames(tri, edge)
    n = tri.n
    k = next((i for i in range(n + 1) if bottom(i) == cell), None)
    if k is None:
        raise ValueError(f"{cell} is not on the outer {edge} row of {tri}")
    moves = []
    for j in range(k, n):
        # Block j: {bottom[j], bottom[j+1], top[j]}; hole at bottom[j+1].
        moves.append(_mv(anchor(j), top(j), bottom(j + 1)))
    for j in range(k - 1, -1, -1):
        moves.append(_mv(anchor(j), top(j), bottom(j)))
    if edge == "B":
        grown = Tri(tri.vx, tri.vy - 1, n + 1)
    elif edge == "V":
        grown = Tri(tri.vx - 1, tri.vy, n + 1)
    else:
        grown = Tri(tri.vx, tri.vy, n + 1)
    return moves, grown


# -- relaxed execution ---------------------------------------------------------


class TriangleRunner:
    """Executes plans on the live pattern with relaxed (skip) semantics."""

    def __init__(self, start: Iterable[Cell]):
        self.cur: Set[Cell] = set(start)
        self.trace: List[MoveRecord] = []

    def exec(self, plan: Sequence[MoveRecord]) -> None:
        cur = self.cur
        for mv in plan:
            if mv.filled in cur:
                continue  # occupied target: relaxed identity, roles swap
            g = mv.g
            block = (g, (g[0] + 1, g[1]), (g[0], g[1] + 1))
            for c in block:
                if c != mv.filled and c not in cur:
                    raise IllegalMoveError(
                        f"planned move at {g} lost its support at {c}"
                    )
            cur.discard(mv.vacated)
            cur.add(mv.filled)
            self.trace.append(mv)


# -- canonical path ------------------------------------------------------------


@dataclass
class _Superline:
    tri: Tri
    edge: str

    def line(self) -> List[Cell]:
        return edge_cells(self.tri, self.edge)


def _rotate(runner: TriangleRunner, sl: _Superline, edge: str) -> None:
    if sl.edge != edge:
        runner.exec(rotation_plan(sl.tri, sl.edge, edge))
        sl.edge = edge


def _absorb(runner: TriangleRunner, sl: _Superline, cell: Cell) -> None:
    edge = side_of(sl.tri, cell)
    _rotate(runner, sl, edge)
    plan, grown = absorb_plan(sl.tri, edge, cell)
    runner.exec(plan)
    sl.tri = grown


def _feed_candidate(donor: _Superline, active: _Superline) -> Tuple[Cell, str]:
    """An edge cell of the donor triangle lying in the active neighbourhood."""
    order = [donor.edge] + [e for e in ("B", "V", "D") if e != donor.edge]
    for edge in order:
        for c in edge_cells(donor.tri, edge):
            if active.tri.in_region(c):
                return c, edge
    raise AssertionError("touching superlines must share a boundary cell")


def _split_line(donor: _Superline, cell: Cell, edge: str) -> List[_Superline]:
    cells = edge_cells(donor.tri, edge)
    idx = cells.index(cell)
    segments = []
    for seg in (cells[:idx], cells[idx + 1 :]):
        if not seg:
            continue
        n = len(seg)
        xs = [c[0] for c in seg]
        ys = [c[1] for c in seg]
        segments.append(_Superline(Tri(min(xs), min(ys), n), edge))
    return segments


def _interacts(a: Tri, b: Tri) -> bool:
    return a.overlaps(b) or a.touches(b) or b.touches(a)


def canonical_path(P: Iterable[Cell], fast: bool = False) -> List[MoveRecord]:
    """A legal move sequence from P to its canonical representative.

    With ``fast=True`` the input must be a single filling component; the
    same machinery runs but the move count is asserted against the tighter
    single-component budget documented in PATH_BUDGET_FAST.
    """
    start = frozenset(P)
    nf = identify_orbit(start)
    target = nf.to_pattern()
    if fast and len(nf.components) != 1:
        raise ValueError("fast variant requires a single-component pattern")
    if start == target:
        return []

    runner = TriangleRunner(start)
    pending = sorted(start, key=lambda c: (c[0] + c[1], c[0]))
    active: Optional[_Superline] = None
    stash: List[_Superline] = []
    guard = 0
    limit = 4000 + 200 * len(start) ** 3

    def startable() -> Optional[Cell]:
        for u in pending:
            if u not in runner.cur:
                continue
            if any(s.tri.contains(u) for s in stash):
                continue
            if active is not None and active.tri.contains(u):
                continue
            return u
        return None

    while True:
        guard += 1
        if guard > limit:
            raise AssertionError("canonical_path failed to converge")
        if active is None:
            u = startable()
            if u is None:
                break
            active = _Superline(Tri(u[0], u[1], 1), "D")
            continue
        hit = next((s for s in stash if _interacts(active.tri, s.tri)), None)
        if hit is not None:
            stash.remove(hit)
            line = hit.line()
            intact = (
                all(c in runner.cur for c in line)
                and not active.tri.overlaps(hit.tri)
                and not any(c in set(active.line()) for c in line)
            )
            if not intact:
                pending.extend(c for c in line if c in runner.cur)
                continue  # dissolved: surviving cells re-enter the queue
            q, edge = _feed_candidate(hit, active)
            _rotate(runner, hit, edge)
            stash.extend(_split_line(hit, q, edge))
            if not active.tri.contains(q):
                _absorb(runner, active, q)
            continue
        grabbed = None
        for u in pending:
            if u in runner.cur and not active.tri.contains(u) and active.tri.in_region(u):
                if any(s.tri.contains(u) for s in stash):
                    continue
                grabbed = u
                break
        if grabbed is None:
            # Also absorb stray cells produced by captures, not in pending.
            for u in sorted(runner.cur):
                if not active.tri.contains(u) and active.tri.in_region(u):
                    if any(s.tri.contains(u) or u in s.line() for s in stash):
                        continue
                    grabbed = u
                    break
        if grabbed is not None:
            _absorb(runner, active, grabbed)
            continue
        if startable() is not None:
            stash.append(active)
            active = None
            continue
        break

    comps = stash + ([active] if active is not None else [])
    comps.sort(key=lambda s: (s.tri.vx, s.tri.vy))
    for comp in comps:
        _rotate(runner, comp, "B")
        _finish_component(runner, comp)

    if frozenset(runner.cur) != target:
        raise AssertionError("canonical_path endpoint mismatch")
    _check_budget(len(start), nf, len(runner.trace), fast)
    return runner.trace


PATH_BUDGET = 40  # trace length <= PATH_BUDGET * |P|^3
PATH_BUDGET_FAST = 40  # single component: <= PATH_BUDGET_FAST * (n^2 + n k)


def _check_budget(size: int, nf: TriangleNormalForm, length: int, fast: bool) -> None:
    if length > PATH_BUDGET * size**3:
        raise AssertionError(
            f"trace length {length} exceeds {PATH_BUDGET}*|P|^3 = {PATH_BUDGET * size ** 3}"
        )
    if fast:
        (_, n, k) = nf.components[0]
        bound = PATH_BUDGET_FAST * (n * n + n * k)
        if length > bound:
            raise AssertionError(
                f"fast trace length {length} exceeds {PATH_BUDGET_FAST}*(n^2+nk) = {bound}"
            )


def _finish_component(runner: TriangleRunner, comp: _Superline) -> None:
    """Bring the component's excess cells onto the canonical slots.

    Invariant: the line sits on the bottom edge and the slots are consumed
    in canonical order, so the rows below the open slot are completely
    occupied.  Extras on the slot row shuttle left into the slot; higher
    extras descend one row at a time, either by a direct drop when they
    have support, by an interrupted bottom-to-diagonal rotation when they
    float freely, or by the five-move shelf exchange when they sit on top
    of the already-placed prefix.
    """
    tri = comp.tri
    vx, vy, n = tri.vx, tri.vy, tri.n
    line = set(edge_cells(tri, "B"))
    slots = excess_slots(n, (vx, vy))
    guard = 0
    while True:
        guard += 1
        if guard > 40 * (n + 1) ** 3 + 50:
            raise AssertionError("component finisher failed to converge")
        placed = 0
        while placed < len(slots) and slots[placed] in runner.cur:
            placed += 1
        extras = [
            c
            for c in runner.cur
            if tri.contains(c) and c not in line and c not in slots[:placed]
        ]
        if not extras:
            break
        sx, sy = slots[placed]
        on_row = sorted(c for c in extras if c[1] == sy)
        if on_row:
            e = on_row[0]  # leftmost, always strictly right of the slot
            if e == (sx, sy):
                continue
            _shuttle_left(runner, e)
            continue
        e = min((c for c in extras if c[1] > sy), key=lambda c: (c[1], -c[0]))
        below = (e[0], e[1] - 1)
        below_r = (e[0] + 1, e[1] - 1)
        if below_r not in runner.cur:
            if below in runner.cur:
                # Drop diagonally right onto the supported hole.
                runner.exec([_mv(below, e, below_r)])
            else:
                _rotation_drop(runner, tri, e)
        elif below not in runner.cur:
            runner.exec([_mv(below, e, below)])
        else:
            # Trapped on the placed shelf: e sits at (ex, sy+1), ex <= sx-2.
            while e[0] < sx - 2:
                _shuttle_right(runner, e)
                e = (e[0] + 1, e[1])
            _shelf_exchange(runner, e, (sx, sy))


def _rotation_drop(runner: TriangleRunner, tri: Tri, e: Cell) -> None:
    """Move a floating excess cell one row down and one column right.

    Runs the bottom->diagonal rotation only up to the staircase level just
    below the cell, drops the cell onto it, then unwinds the rotation.
    Skipped moves pair with skipped mirrors, so the unwind restores every
    other marble exactly and the net effect is the single drop.
    """
    mhat = (e[0] - tri.vx) + (e[1] - tri.vy)  # requires local y >= 2
    plan = [mv for m in range(2, mhat + 1) for mv in _stage_moves(tri, m)]
    runner.exec(plan)
    drop = _mv((e[0], e[1] - 1), e, (e[0] + 1, e[1] - 1))
    if drop.filled in runner.cur:
        raise AssertionError(f"drop target {drop.filled} unexpectedly occupied")
    runner.exec([drop])
    runner.exec(reverse_plan(plan))


def _stage_moves(tri: Tri, m: int) -> List[MoveRecord]:
    vx, vy = tri.vx, tri.vy
    out = []
    for i in range(m - 2, -1, -1):
        a = (vx + i, vy + m - 2 - i)
        b = (vx + i, vy + m - 1 - i)
        out.append(_mv(a, a, b))
    return out


def _shuttle_left(runner: TriangleRunner, e: Cell) -> None:
    """One column left along a row whose row below is fully occupied."""
    x, y = e
    m1 = _mv((x - 1, y - 1), (x, y - 1), (x - 1, y))
    m2 = _mv((x, y - 1), (x, y), (x, y - 1))
    runner.exec([m1, m2])


def _shuttle_right(runner: TriangleRunner, e: Cell) -> None:
    """One column right along a row whose row below is fully occupied."""
    x, y = e
    m1 = _mv((x + 1, y - 1), (x + 1, y - 1), (x + 1, y))
    m2 = _mv((x, y - 1), (x, y), (x + 1, y - 1))
    runner.exec([m1, m2])


def _shelf_exchange(runner: TriangleRunner, e: Cell, slot: Cell) -> None:
    """Consume an extra at (sx-2, sy+1) into the open slot (sx, sy).

    Borrows a marble from the full row below the slot, lifts the shelf cell
    left of the slot, walks the extra into the lift hole, returns the
    borrowed marble and drops the lifted one into the slot.
    """
    sx, sy = slot
    assert e == (sx - 2, sy + 1)
    moves = [
        _mv((sx, sy - 1), (sx + 1, sy - 1), (sx, sy)),          # borrow
        _mv((sx - 1, sy), (sx - 1, sy), (sx - 1, sy + 1)),      # lift
        _mv((sx - 2, sy), e, (sx - 1, sy)),                     # walk extra in
        _mv((sx, sy - 1), (sx, sy), (sx + 1, sy - 1)),          # return borrow
        _mv((sx - 1, sy), (sx - 1, sy + 1), (sx, sy)),          # place
    ]
    runner.exec(moves)
