"""Solitaire moves, the filling process and excess measures.

A pattern is a ``frozenset`` of group elements.  A ``(C, S)``-solitaire move
at translate ``g`` relocates the unique hole of ``gS`` within ``gC``; a
filling move adds that hole instead.  The filling closure is confluent, so
the deterministic order used here only affects traces, never the closure.
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .groups import Element, GroupContext, GroupError, cyclic_coset_membership

Pattern = frozenset


class IllegalMoveError(ValueError):
    """A move record that fails one of the legality clauses."""


class BudgetError(RuntimeError):
    """A step cap or enumeration gate was exceeded."""


@dataclass(frozen=True)
class Shape:
    ctx: GroupContext
    S: frozenset
    C: frozenset

    def __post_init__(self):
        if not self.S or not self.C:
            raise GroupError("S and C must be nonempty")
        if not self.C <= self.S:
            raise GroupError("C must be a subset of S")
        for cell in self.S:
            self.ctx.check(cell)

    @staticmethod
    def make(ctx: GroupContext, S: Iterable[Element], C: Optional[Iterable[Element]] = None) -> "Shape":
        S = frozenset(S)
        return Shape(ctx, S, frozenset(C) if C is not None else S)

    def is_linear(self, budget: int = 8):
        return cyclic_coset_membership(self.ctx, self.S, budget=budget)


@dataclass(frozen=True)
class MoveRecord:
    g: Element
    vacated: Element
    filled: Element

    def reversed(self) -> "MoveRecord":
        return MoveRecord(self.g, self.filled, self.vacated)


@dataclass(frozen=True)
class FillStep:
    g: Element
    added: frozenset


def pattern(cells: Iterable[Element]) -> Pattern:
    return frozenset(cells)


def _candidate_translates(ctx: GroupContext, shape: Shape, cells: Iterable[Element]) -> Set[Element]:
    out = set()
    inv = {s: ctx.inverse(s) for s in shape.S}
    for p in cells:
        for s in shape.S:
            out.add(ctx.multiply(p, inv[s]))
    return out


def _hole_of(ctx: GroupContext, shape: Shape, P, g: Element) -> Optional[Element]:
    """The unique cell of gS missing from P, or None if not exactly one."""
    hole = None
    for s in shape.S:
        cell = ctx.multiply(g, s)
        if cell not in P:
            if hole is not None:
                return None
            hole = cell
    return hole


def legal_moves(ctx: GroupContext, shape: Shape, P: Pattern) -> List[MoveRecord]:
    """All (g, vacated, filled) moves applicable to P, deterministically ordered.

    Translates are enumerated over {p s^-1 : p in P, s in S}; any translate
    whose window has a single hole meets P, so this is complete.
    """
    if len(shape.S) < 2:
        raise GroupError("moves need |S| >= 2")
    moves = set()
    for g in _candidate_translates(ctx, shape, P):
        hole = _hole_of(ctx, shape, P, g)
        if hole is None:
            continue
        gC = {ctx.multiply(g, c) for c in shape.C}
        if hole not in gC:
            continue
        for vacated in gC & P:
            moves.add(MoveRecord(g, vacated, hole))
    return sorted(moves, key=lambda m: (ctx.sort_key(m.g), ctx.sort_key(m.vacated), ctx.sort_key(m.filled)))


def check_move(ctx: GroupContext, shape: Shape, P: Pattern, move: MoveRecord) -> None:
    """Raise IllegalMoveError naming the violated clause, if any."""
    gS = [ctx.multiply(move.g, s) for s in shape.S]
    gC = {ctx.multiply(move.g, c) for c in shape.C}
    holes = [c for c in gS if c not in P]
    if len(holes) != 1:
        raise IllegalMoveError(
            f"|P ∩ gS| = {len(gS) - len(holes)}, expected {len(gS) - 1}"
        )
    if holes[0] != move.filled:
        raise IllegalMoveError(f"hole of gS is {holes[0]}, not {move.filled}")
    if move.filled not in gC:
        raise IllegalMoveError("filled cell lies outside gC")
    if move.vacated not in gC:
        raise IllegalMoveError("vacated cell lies outside gC")
    if move.vacated not in P:
        raise IllegalMoveError("vacated cell is not occupied")
    if move.vacated == move.filled:
        raise IllegalMoveError("vacated equals filled")


def apply_move(ctx: GroupContext, shape: Shape, P: Pattern, move: MoveRecord) -> Pattern:
    check_move(ctx, shape, P, move)
    return (P - {move.vacated}) | {move.filled}


def replay(ctx: GroupContext, shape: Shape, P: Pattern, trace: Sequence[MoveRecord]) -> Pattern:
    for move in trace:
        P = apply_move(ctx, shape, P, move)
    return P


def default_step_cap(shape: Shape, P: Pattern) -> int:
    return 10 * (len(P) + len(shape.S)) ** 2


def filling_closure(
    ctx: GroupContext,
    shape: Shape,
    P: Pattern,
    step_cap: Optional[int] = None,
    rng: Optional[random.Random] = None,
) -> Tuple[Pattern, List[FillStep]]:
    """The filling closure φ(P) together with a replayable fill trace.

    Order is lexicographic on the translate unless ``rng`` is given (the
    closure itself is order-independent by confluence).  Z^d contexts with a
    non-linear shape terminate unconditionally; otherwise a step cap applies
    (``default_step_cap`` unless given) and exhaustion raises BudgetError.
    """
    cur = set(P)
    trace: List[FillStep] = []
    guaranteed = ctx.kind == "Zd" and shape.is_linear() is None
    cap = step_cap
    if cap is None and not guaranteed:
        cap = default_step_cap(shape, P)

    if rng is None:
        frontier: List[Tuple[object, Element]] = []
        seen = set()
        for g in _candidate_translates(ctx, shape, P):
            heapq.heappush(frontier, (ctx.sort_key(g), g))
            seen.add(g)
        while frontier:
            _, g = heapq.heappop(frontier)
            seen.discard(g)
            hole = _hole_of(ctx, shape, cur, g)
            if hole is None or hole not in {ctx.multiply(g, c) for c in shape.C}:
                continue
            if cap is not None and len(trace) >= cap:
                _raise_fill_budget(ctx, shape, cap)
            cur.add(hole)
            trace.append(FillStep(g, frozenset({hole})))
            for g2 in _candidate_translates(ctx, shape, [hole]):
                if g2 not in seen:
                    heapq.heappush(frontier, (ctx.sort_key(g2), g2))
                    seen.add(g2)
            # g itself may admit no further fill; holes elsewhere re-add it.
    else:
        pool = list(_candidate_translates(ctx, shape, P))
        while pool:
            idx = rng.randrange(len(pool))
            g = pool.pop(idx)
            hole = _hole_of(ctx, shape, cur, g)
            if hole is None or hole not in {ctx.multiply(g, c) for c in shape.C}:
                continue
            if cap is not None and len(trace) >= cap:
                _raise_fill_budget(ctx, shape, cap)
            cur.add(hole)
            trace.append(FillStep(g, frozenset({hole})))
            pool.extend(_candidate_translates(ctx, shape, [hole]))
    return frozenset(cur), trace


def _raise_fill_budget(ctx, shape, cap):
    witness = shape.is_linear()
    if witness is not None:
        a, b, c = witness
        raise BudgetError(
            f"possibly infinite filling after {cap} steps: shape is linear, "
            f"S ⊆ a<b>c with b = {ctx.format_element(b)}"
        )
    raise BudgetError(f"filling exceeded the step cap of {cap}")


def fill_of(ctx: GroupContext, shape: Shape, P: Pattern, **kw) -> Pattern:
    return filling_closure(ctx, shape, P, **kw)[0]


# -- excess -------------------------------------------------------------------


def rank_exact(
    ctx: GroupContext,
    shape: Shape,
    P: Pattern,
    size_limit: int = 22,
    fill=None,
) -> int:
    """min{|R| : φ(R) = φ(P)} by ascending subset search over φ(P).

    ``fill`` may supply a faster closure function (same signature as
    ``fill_of``); shape-specific modules provide closed forms instead.
    """
    fill = fill or fill_of
    closure = fill(ctx, shape, P)
    if len(closure) > size_limit:
        raise BudgetError(
            f"|φ(P)| = {len(closure)} exceeds the exact-rank gate of {size_limit}; "
            "use shape-specific rank"
        )
    cells = sorted(closure, key=ctx.sort_key)
    for k in range(len(P) + 1):
        for R in itertools.combinations(cells, k):
            if fill(ctx, shape, frozenset(R)) == closure:
                return k
    return len(P)


def excess(ctx: GroupContext, shape: Shape, P: Pattern, **kw) -> int:
    return len(P) - rank_exact(ctx, shape, P, **kw)


def excess_sets(
    ctx: GroupContext,
    shape: Shape,
    P: Pattern,
    size_limit: int = 20,
    fill=None,
) -> Tuple[List[frozenset], int]:
    """Maximal excess sets of P and the visible excess Ê(P).

    E(P) is a down set, so it is grown level by level from removable
    singletons; only the maximal elements are returned.
    """
    if len(P) > size_limit:
        raise BudgetError(f"|P| = {len(P)} exceeds the excess-set gate of {size_limit}")
    fill = fill or fill_of
    closure = fill(ctx, shape, P)
    level: Set[frozenset] = {frozenset()}
    all_excess: Set[frozenset] = {frozenset()}
    cells = sorted(P, key=ctx.sort_key)
    while True:
        nxt: Set[frozenset] = set()
        for Q in level:
            for x in cells:
                if x in Q:
                    continue
                Q2 = Q | {x}
                if Q2 in nxt or Q2 in all_excess:
                    continue
                if fill(ctx, shape, P - Q2) == closure:
                    nxt.add(Q2)
        if not nxt:
            break
        all_excess |= nxt
        level = nxt
    maximal = [Q for Q in all_excess if not any(Q < R for R in all_excess)]
    visible = max(len(Q) for Q in all_excess)
    maximal.sort(key=lambda Q: (len(Q), sorted(ctx.sort_key(x) for x in Q)))
    return maximal, visible


def visible_excess(ctx: GroupContext, shape: Shape, P: Pattern, **kw) -> int:
    return excess_sets(ctx, shape, P, **kw)[1]


# -- monotone replay ----------------------------------------------------------


def solitaire_applies(ctx: GroupContext, shape: Shape, P: Pattern, g: Element) -> bool:
    """Relaxed applicability: all pivots present and at most one hole in gC."""
    for s in shape.S - shape.C:
        if ctx.multiply(g, s) not in P:
            return False
    holes = 0
    for c in shape.C:
        if ctx.multiply(g, c) not in P:
            holes += 1
            if holes > 1:
                return False
    return True


def monotone_replay(
    ctx: GroupContext,
    shape: Shape,
    P: Pattern,
    trace: Sequence[MoveRecord],
    extra: Pattern,
) -> Tuple[Pattern, Dict[Element, Element]]:
    """Replay a P-valid trace on P ∪ extra under the relaxed semantics.

    Each move's transposition is applied wherever solitaire applies; when the
    target cell is occupied by an extra, the two marbles swap roles and the
    physical pattern is unchanged.  Extra marbles can never block a valid
    plan, so the plain endpoint is always contained in the result.  Returns
    the final pattern and where each extra cell ended up.
    """
    if extra & P:
        raise GroupError("extra cells must be disjoint from P")
    cur = set(P | extra)
    where = {x: x for x in extra}
    inverse_where = {x: x for x in extra}
    for i, move in enumerate(trace):
        if not solitaire_applies(ctx, shape, frozenset(cur), move.g):
            raise IllegalMoveError(f"trace step {i} does not apply at g = {move.g}")
        a, b = move.vacated, move.filled
        if b in cur:
            # Occupied target: the extra there takes over the moving role.
            if b in inverse_where:
                origin = inverse_where.pop(b)
                where[origin] = a
                inverse_where[a] = origin
            continue
        if a not in cur:
            raise IllegalMoveError(f"trace step {i} vacates an empty cell {a}")
        cur.discard(a)
        cur.add(b)
        if a in inverse_where:
            origin = inverse_where.pop(a)
            where[origin] = b
            inverse_where[b] = origin
    return frozenset(cur), where
