"""Square solitaire on Z^2: the 2x2 shape, rectangles, crosses and paths.

The filling closure of a pattern is a union of non-touching rectangles
(touching in the 8-neighbour sense of the square move).  Orbits are
classified by those rectangles plus the excess inside each; the canonical
representative is the L-shape (bottom row + left column) with the excess
packed into the interior, row by row from the bottom, left to right in
each row.

``square_canonical_path`` mirrors the triangle construction: components
are grown by repositioning a cross (the line analogue) so absorption is
free, and excess is delivered with crane sorties, shuttles along supported
rows and a conveyor step for cells trapped on the placed shelf.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from .core import IllegalMoveError, MoveRecord, Pattern, Shape
from .groups import GroupContext

CTX = GroupContext("Zd", 2)
SQUARE_CELLS = frozenset({(0, 0), (1, 0), (0, 1), (1, 1)})
SQUARE = Shape.make(CTX, SQUARE_CELLS)

Cell = Tuple[int, int]


@dataclass(frozen=True, order=True)
class Rect:
    vx: int
    vy: int
    w: int
    h: int

    @property
    def x1(self) -> int:
        return self.vx + self.w - 1

    @property
    def y1(self) -> int:
        return self.vy + self.h - 1

    def contains(self, c: Cell) -> bool:
        return self.vx <= c[0] <= self.x1 and self.vy <= c[1] <= self.y1

    def cells(self) -> List[Cell]:
        return [
            (x, y)
            for y in range(self.vy, self.y1 + 1)
            for x in range(self.vx, self.x1 + 1)
        ]

    def in_neighbourhood(self, c: Cell) -> bool:
        """c is a cell where a square move could interact with this rectangle."""
        x, y = c
        if self.w >= 2 and self.vx <= x <= self.x1 and (y == self.vy - 1 or y == self.y1 + 1):
            return True
        if self.h >= 2 and self.vy <= y <= self.y1 and (x == self.vx - 1 or x == self.x1 + 1):
            return True
        return False

    def in_region(self, c: Cell) -> bool:
        return self.contains(c) or self.in_neighbourhood(c)

    def adjacent(self, other: "Rect") -> bool:
        """Some cell of self is orthogonally adjacent to a cell of other."""
        dx = max(self.vx, other.vx) - min(self.x1, other.x1)
        dy = max(self.vy, other.vy) - min(self.y1, other.y1)
        return (dx <= 0 and dy <= 1) or (dx <= 1 and dy <= 0)

    def overlaps(self, other: "Rect") -> bool:
        return (
            max(self.vx, other.vx) <= min(self.x1, other.x1)
            and max(self.vy, other.vy) <= min(self.y1, other.y1)
        )

    def extend_toward(self, c: Cell) -> "Rect":
        x, y = c
        if y == self.vy - 1:
            return Rect(self.vx, self.vy - 1, self.w, self.h + 1)
        if y == self.y1 + 1:
            return Rect(self.vx, self.vy, self.w, self.h + 1)
        if x == self.vx - 1:
            return Rect(self.vx - 1, self.vy, self.w + 1, self.h)
        if x == self.x1 + 1:
            return Rect(self.vx, self.vy, self.w + 1, self.h)
        raise ValueError(f"{c} is not adjacent to {self}")

    def hull_merge(self, other: "Rect") -> "Rect":
        vx = min(self.vx, other.vx)
        vy = min(self.vy, other.vy)
        return Rect(
            vx, vy, max(self.x1, other.x1) - vx + 1, max(self.y1, other.y1) - vy + 1
        )


def _interacts(a: Rect, b: Rect) -> bool:
    if a.overlaps(b) or a.adjacent(b):
        return True
    return any(a.in_neighbourhood(c) for c in b.cells()) or any(
        b.in_neighbourhood(c) for c in a.cells()
    )


def rect_decomposition(P: Iterable[Cell]) -> List[Rect]:
    """Unique maximal non-touching rectangles covering the filling closure."""
    comps: List[Rect] = []
    for c in sorted(set(P)):
        if any(r.contains(c) for r in comps):
            continue
        placed = None
        for i, r in enumerate(comps):
            if r.in_neighbourhood(c) or Rect(c[0], c[1], 1, 1).adjacent(r):
                placed = i
                break
        if placed is None:
            comps.append(Rect(c[0], c[1], 1, 1))
        else:
            comps[placed] = comps[placed].extend_toward(c)
        merged = True
        while merged:
            merged = False
            for i in range(len(comps)):
                for j in range(i + 1, len(comps)):
                    if _interacts(comps[i], comps[j]):
                        comps[i] = comps[i].hull_merge(comps[j])
                        del comps[j]
                        merged = True
                        break
                if merged:
                    break
    return sorted(comps)


def square_fill(P: Iterable[Cell]) -> Pattern:
    out: Set[Cell] = set()
    for r in rect_decomposition(P):
        out.update(r.cells())
    return frozenset(out)


def square_rank(P: Iterable[Cell]) -> int:
    return sum(r.w + r.h - 1 for r in rect_decomposition(P))


def square_excess(P: Iterable[Cell]) -> int:
    P = set(P)
    return len(P) - square_rank(P)


@dataclass(frozen=True)
class SquareNormalForm:
    """Components (v, a, b, k): the pattern ∪ v + L_{a,b,k}, sorted by anchor."""

    components: Tuple[Tuple[Cell, int, int, int], ...]

    def to_pattern(self) -> Pattern:
        cells: Set[Cell] = set()
        for v, a, b, k in self.components:
            cells.update(labk_cells(a, b, k, v))
        return frozenset(cells)

    def to_json(self) -> list:
        return [
            {"v": [v[0], v[1]], "a": a, "b": b, "k": k}
            for v, a, b, k in self.components
        ]


def interior_slots(a: int, b: int, v: Cell = (0, 0)) -> List[Cell]:
    """Interior cells of the a x b rectangle, rows bottom-up, left to right."""
    vx, vy = v
    return [(vx + x, vy + y) for y in range(1, b) for x in range(1, a)]


def labk_cells(a: int, b: int, k: int, v: Cell = (0, 0)) -> List[Cell]:
    if not 0 <= k <= (a - 1) * (b - 1):
        raise ValueError(f"need 0 <= k <= (a-1)(b-1), got a={a}, b={b}, k={k}")
    vx, vy = v
    cells = [(vx + i, vy) for i in range(a)]
    cells += [(vx, vy + j) for j in range(1, b)]
    return cells + interior_slots(a, b, v)[:k]


def square_identify_orbit(P: Iterable[Cell]) -> SquareNormalForm:
    P = set(P)
    comps = []
    for r in rect_decomposition(P):
        inside = sum(1 for c in P if r.contains(c))
        comps.append(((r.vx, r.vy), r.w, r.h, inside - (r.w + r.h - 1)))
    return SquareNormalForm(tuple(comps))


def cross_member(P: Iterable[Cell]) -> bool:
    """True iff P is in the orbit of a cross (single rectangle, no excess)."""
    P = set(P)
    comps = rect_decomposition(P)
    return len(comps) == 1 and comps[0].w + comps[0].h - 1 == len(P)


# -- move plans ----------------------------------------------------------------


def _mv(g: Cell, a: Cell, b: Cell) -> MoveRecord:
    return MoveRecord(g, a, b)


def reverse_plan(plan: Sequence[MoveRecord]) -> List[MoveRecord]:
    return [m.reversed() for m in reversed(plan)]


def _transpose_plan(plan: Sequence[MoveRecord]) -> List[MoveRecord]:
    t = lambda c: (c[1], c[0])
    return [MoveRecord(t(m.g), t(m.vacated), t(m.filled)) for m in plan]


def _shift_vert_once(rect: Rect, ry: int, c: int, right: bool) -> List[MoveRecord]:
    """Move the vertical line of a cross one column (c -> c±1).

    The full row at ry is the base.  The marble beside the line climbs along
    it, the far end hops over, and the rest follows diagonally; cells above
    and below the base row are handled by mirrored halves.
    """
    d = 1 if right else -1
    nc = c + d
    moves: List[MoveRecord] = []

    def block_anchor(xleft: int, ylow: int) -> Cell:
        return (xleft, ylow)

    def half(y_top: int, up: bool) -> None:
        # Shift the part of the line strictly between ry and y_top.
        step = 1 if up else -1
        ys = list(range(ry, y_top, step))
        if not ys:
            return
        for y in ys[:-1]:
            lo = min(y, y + step)
            moves.append(_mv(block_anchor(min(c, nc), lo), (nc, y), (nc, y + step)))
        y = ys[-1]
        lo = min(y, y_top)
        moves.append(_mv(block_anchor(min(c, nc), lo), (c, y_top), (nc, y_top)))
        for y in reversed(ys[:-1]):
            lo = min(y, y + step)
            moves.append(_mv(block_anchor(min(c, nc), lo), (c, y + step), (nc, y)))
        # The first climber started from the base row; the last move refills it.

    half(rect.y1, up=True)
    half(rect.vy, up=False)
    return moves


def shift_vert_plan(rect: Rect, ry: int, c_from: int, c_to: int) -> List[MoveRecord]:
    moves: List[MoveRecord] = []
    c = c_from
    while c != c_to:
        right = c_to > c
        if rect.h > 1:
            moves.extend(_shift_vert_once(rect, ry, c, right))
        c += 1 if right else -1
    return moves


def shift_horiz_plan(rect: Rect, cx: int, r_from: int, r_to: int) -> List[MoveRecord]:
    trect = Rect(rect.vy, rect.vx, rect.h, rect.w)
    return _transpose_plan(shift_vert_plan(trect, cx, r_from, r_to))


# -- relaxed execution -----------------------------------------------------------


class SquareRunner:
    def __init__(self, start: Iterable[Cell]):
        self.cur: Set[Cell] = set(start)
        self.trace: List[MoveRecord] = []

    def exec(self, plan: Sequence[MoveRecord]) -> None:
        cur = self.cur
        for mv in plan:
            if mv.filled in cur:
                continue
            g = mv.g
            block = (g, (g[0] + 1, g[1]), (g[0], g[1] + 1), (g[0] + 1, g[1] + 1))
            for c in block:
                if c != mv.filled and c not in cur:
                    raise IllegalMoveError(
                        f"planned move at {g} lost its support at {c}"
                    )
            cur.discard(mv.vacated)
            cur.add(mv.filled)
            self.trace.append(mv)


# -- canonical path ---------------------------------------------------------------


@dataclass
class _Cross:
    rect: Rect
    cx: int  # column of the vertical line
    ry: int  # row of the horizontal line

    def line(self) -> List[Cell]:
        r = self.rect
        cells = {(x, self.ry) for x in range(r.vx, r.x1 + 1)}
        cells |= {(self.cx, y) for y in range(r.vy, r.y1 + 1)}
        return sorted(cells)


def _reposition(runner: SquareRunner, cr: _Cross, cx: int, ry: int) -> None:
    if cx != cr.cx:
        runner.exec(shift_vert_plan(cr.rect, cr.ry, cr.cx, cx))
        cr.cx = cx
    if ry != cr.ry:
        runner.exec(shift_horiz_plan(cr.rect, cr.cx, cr.ry, ry))
        cr.ry = ry


def _absorb(runner: SquareRunner, cr: _Cross, cell: Cell) -> None:
    """Grow the cross by one boundary cell; only repositioning moves occur."""
    r = cr.rect
    x, y = cell
    if y == r.vy - 1 or y == r.y1 + 1:
        _reposition(runner, cr, x, cr.ry)
    elif x == r.vx - 1 or x == r.x1 + 1:
        _reposition(runner, cr, cr.cx, y)
    else:
        raise ValueError(f"{cell} is not adjacent to {r}")
    cr.rect = r.extend_toward(cell)


def _feed_candidate(donor: _Cross, active: _Cross) -> Optional[Cell]:
    for c in donor.rect.cells():
        if active.rect.in_region(c):
            return c
    return None


def _split_cross(donor: _Cross, q: Cell) -> List[_Cross]:
    """Components left after removing the marble at q from the donor's cross.

    The donor's cross must pass through q.  Segments that keep the junction
    stay crosses; the others are bare lines.
    """
    r = donor.rect
    out: List[_Cross] = []
    if q[1] != donor.ry or (r.w == 1 and r.h > 1):
        # q is on the vertical line.
        assert q[0] == donor.cx
        below = (r.vy, q[1] - 1)
        above = (q[1] + 1, r.y1)
        for y0, y1 in (below, above):
            if y0 > y1:
                continue
            if y0 <= donor.ry <= y1:
                out.append(_Cross(Rect(r.vx, y0, r.w, y1 - y0 + 1), donor.cx, donor.ry))
            else:
                out.append(_Cross(Rect(q[0], y0, 1, y1 - y0 + 1), q[0], y0))
    else:
        assert q[0] != donor.cx or r.h == 1
        left = (r.vx, q[0] - 1)
        right = (q[0] + 1, r.x1)
        for x0, x1 in (left, right):
            if x0 > x1:
                continue
            if x0 <= donor.cx <= x1:
                out.append(_Cross(Rect(x0, r.vy, x1 - x0 + 1, r.h), donor.cx, donor.ry))
            else:
                out.append(_Cross(Rect(x0, q[1], x1 - x0 + 1, 1), x0, q[1]))
    return out


def square_canonical_path(P: Iterable[Cell]) -> List[MoveRecord]:
    """A legal move sequence from P to its canonical representative."""
    start = frozenset(P)
    nf = square_identify_orbit(start)
    target = nf.to_pattern()
    if start == target:
        return []

    runner = SquareRunner(start)
    pending = sorted(start)
    active: Optional[_Cross] = None
    stash: List[_Cross] = []
    guard = 0
    limit = 4000 + 200 * len(start) ** 3

    def startable() -> Optional[Cell]:
        for u in pending:
            if u not in runner.cur:
                continue
            if any(s.rect.contains(u) for s in stash):
                continue
            if active is not None and active.rect.contains(u):
                continue
            return u
        return None

    while True:
        guard += 1
        if guard > limit:
            raise AssertionError("square_canonical_path failed to converge")
        if active is None:
            u = startable()
            if u is None:
                break
            active = _Cross(Rect(u[0], u[1], 1, 1), u[0], u[1])
            continue
        hit = next((s for s in stash if _interacts(active.rect, s.rect)), None)
        if hit is not None:
            stash.remove(hit)
            line = hit.line()
            intact = (
                all(c in runner.cur for c in line)
                and not active.rect.overlaps(hit.rect)
                and not any(c in set(active.line()) for c in line)
            )
            if not intact:
                pending.extend(c for c in line if c in runner.cur)
                continue
            q = _feed_candidate(hit, active)
            if q is None:
                if _feed_candidate(active, hit) is not None:
                    # Only the donor's neighbourhood reaches the active
                    # component: swap roles and feed the other way.
                    stash.append(active)
                    active = hit
                    continue
                # Collinear butt-joined lines: the union is itself a line,
                # so the merge is purely a bookkeeping join.
                hull = active.rect.hull_merge(hit.rect)
                assert hull.w == 1 or hull.h == 1
                joined = _Cross(hull, hull.vx, hull.vy)
                assert all(c in runner.cur for c in joined.line())
                active = joined
                continue
            if hit.rect.h == 1:
                pass  # bare row: q is already on it
            elif hit.rect.w == 1 or q[1] != hit.ry:
                _reposition(runner, hit, q[0], hit.ry)
            elif q[0] == hit.cx:
                # q sits on the junction of a proper cross: move the
                # vertical line aside so the row split stays a cross.
                new_cx = hit.rect.vx if q[0] != hit.rect.vx else hit.rect.x1
                _reposition(runner, hit, new_cx, hit.ry)
            stash.extend(_split_cross(hit, q))
            if not active.rect.contains(q):
                _absorb(runner, active, q)
            continue
        grabbed = None
        for u in pending:
            if (
                u in runner.cur
                and not active.rect.contains(u)
                and active.rect.in_region(u)
                and not any(s.rect.contains(u) for s in stash)
            ):
                grabbed = u
                break
        if grabbed is None:
            for u in sorted(runner.cur):
                if not active.rect.contains(u) and active.rect.in_region(u):
                    if any(s.rect.contains(u) or u in s.line() for s in stash):
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
    comps.sort(key=lambda s: (s.rect.vx, s.rect.vy))
    for comp in comps:
        _reposition(runner, comp, comp.rect.vx, comp.rect.vy)
        _finish_component(runner, comp)

    if frozenset(runner.cur) != target:
        raise AssertionError("square_canonical_path endpoint mismatch")
    if len(runner.trace) > PATH_BUDGET * len(start) ** 3:
        raise AssertionError("square path exceeded the documented cubic budget")
    return runner.trace


PATH_BUDGET = 40  # trace length <= PATH_BUDGET * |P|^3


def _finish_component(runner: SquareRunner, comp: _Cross) -> None:
    """Pack the component's excess onto the canonical interior slots.

    Slots are consumed bottom row up, left to right, so rows below the open
    slot are full.  Extras on the slot row shuttle left; extras one row up
    on the placed shelf are parked at the left and consumed by a conveyor
    step; floating extras are dropped with crane sorties (the vertical line
    travels beside them and back, restoring everything it passed).
    """
    r = comp.rect
    line = set(comp.line())
    slots = interior_slots(r.w, r.h, (r.vx, r.vy))
    guard = 0
    while True:
        guard += 1
        if guard > 40 * (r.w + r.h + 1) ** 3 + 50:
            raise AssertionError("square finisher failed to converge")
        placed = 0
        while placed < len(slots) and slots[placed] in runner.cur:
            placed += 1
        extras = [
            c
            for c in runner.cur
            if r.contains(c) and c not in line and c not in slots[:placed]
        ]
        if not extras:
            break
        sx, sy = slots[placed]
        on_row = sorted(c for c in extras if c[1] == sy)
        if on_row:
            e = on_row[0]
            if e == (sx, sy):
                continue
            runner.exec([_mv((e[0] - 1, sy - 1), e, (e[0] - 1, sy))])
            continue
        trapped = sorted(c for c in extras if c[1] == sy + 1 and c[0] < sx)
        if trapped:
            e = trapped[0]
            while e[0] > 1 + r.vx:
                runner.exec([_mv((e[0] - 1, sy), e, (e[0] - 1, sy + 1))])
                e = (e[0] - 1, e[1])
            plan = [
                _mv((x, sy - 1), (x, sy), (x + 1, sy))
                for x in range(sx - 1, r.vx, -1)
            ]
            plan.append(_mv((r.vx, sy), e, (r.vx + 1, sy)))
            runner.exec(plan)
            continue
        e = min((c for c in extras if c[1] > sy), key=lambda c: (c[1], -c[0]))
        _crane_drop(runner, comp, e)


def _crane_drop(runner: SquareRunner, comp: _Cross, e: Cell) -> None:
    """Send the vertical line beside a floating extra, drop it, return.

    The sortie's out and home plans are exact mirrors whose footprint stays
    strictly left of the extra's column, so everything they disturb is
    restored; only the drop itself changes the pattern.
    """
    r = comp.rect
    ex, ey = e
    crane_col = ex - 1
    out = shift_vert_plan(r, comp.ry, comp.cx, crane_col)
    runner.exec(out)
    drops = []
    y = ey
    while y - 1 >= r.vy and (ex, y - 1) not in runner.cur:
        drops.append(_mv((crane_col, y - 1), (ex, y), (ex, y - 1)))
        y -= 1
    if not drops:
        raise AssertionError(f"crane found no room below {e}")
    runner.exec(drops)
    runner.exec(reverse_plan(out))
