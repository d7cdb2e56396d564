"""TEP rules, local validity, independence, spanning and base changes.

A (C,S)-TEP rule fixes, for each corner c and each assignment of S minus c,
a unique completing symbol.  Independence and spanning are evaluated inside
a finite convex envelope by enumerating every locally valid pattern on it:
for TEP rules, locally valid patterns on convex domains extend globally, so
the finite check is faithful.  Enumeration walks the envelope in a convex
(half-plane sweep) order, assigning free cells and deducing forced ones,
which costs |A|^(filling basis) rather than |A|^|D|.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .core import BudgetError, MoveRecord, Pattern, Shape, fill_of, legal_moves
from .groups import Element, GroupContext

Cell = Tuple[int, int]
Assignment = Tuple  # symbols in a fixed cell order


class RuleError(ValueError):
    pass


@dataclass(frozen=True)
class TepRule:
    """An alphabet plus the set of allowed S-patterns, TEP over the corners C.

    ``allowed`` maps are precomputed per corner: for each c, a dict from the
    restriction to S minus c (in sorted cell order) to the forced symbol.
    """

    shape: Shape
    alphabet: Tuple
    allowed: FrozenSet[Assignment]  # assignments in sorted-S order
    name: str = "table"

    def __post_init__(self):
        cells = self.cells()
        k = len(cells)
        if len(self.allowed) != len(self.alphabet) ** (k - 1):
            raise RuleError(
                f"a TEP table over {len(self.alphabet)} symbols and {k} cells "
                f"needs {len(self.alphabet) ** (k - 1)} patterns, "
                f"got {len(self.allowed)}"
            )
        for c in self.shape.C:
            self.completion_table(c)

    def cells(self) -> List[Element]:
        return sorted(self.shape.S)

    def completion_table(self, c: Element) -> Dict[Assignment, object]:
        cells = self.cells()
        idx = cells.index(c)
        table: Dict[Assignment, object] = {}
        for pat in self.allowed:
            rest = pat[:idx] + pat[idx + 1 :]
            if rest in table and table[rest] != pat[idx]:
                raise RuleError(f"corner {c} is not uniquely determined")
            table[rest] = pat[idx]
        if len(table) != len(self.alphabet) ** (len(cells) - 1):
            raise RuleError(f"corner {c} misses completions")
        return table

    def is_allowed(self, values: Sequence) -> bool:
        return tuple(values) in self.allowed


def abelian_sum_rule(shape: Shape, modulus: int, target: int = 0) -> TepRule:
    """Symbols Z/m with the window required to sum to the target constant."""
    cells = sorted(shape.S)
    allowed = frozenset(
        tup
        for tup in itertools.product(range(modulus), repeat=len(cells))
        if sum(tup) % modulus == target % modulus
    )
    return TepRule(shape, tuple(range(modulus)), allowed, name=f"sum{modulus}")


def ledrappier_rule(shape: Shape) -> TepRule:
    return abelian_sum_rule(shape, 2, 0)


def group_product_rule(shape: Shape, elements: Sequence, op: Callable) -> TepRule:
    """Window product (in sorted cell order) equal to the group identity.

    ``elements`` lists the group elements with the identity first; ``op`` is
    the group operation.  Works for non-abelian groups such as S3.
    """
    cells = sorted(shape.S)
    ident = elements[0]
    allowed = []
    for tup in itertools.product(elements, repeat=len(cells)):
        acc = ident
        for v in tup:
            acc = op(acc, v)
        if acc == ident:
            allowed.append(tup)
    return TepRule(shape, tuple(elements), frozenset(allowed), name="group")


def s3_rule(shape: Shape) -> TepRule:
    """The symmetric group on three points as alphabet, window product = id."""
    perms = [
        (0, 1, 2),
        (1, 2, 0),
        (2, 0, 1),
        (0, 2, 1),
        (2, 1, 0),
        (1, 0, 2),
    ]

    def op(p, q):
        return tuple(p[q[i]] for i in range(3))

    return group_product_rule(shape, perms, op)


def sum_with_f_rule(shape: Shape, modulus: int, f: Dict[Assignment, int]) -> TepRule:
    """f(restriction to S minus C) plus the sum over C equal to zero mod m."""
    cells = sorted(shape.S)
    pivots = sorted(shape.S - shape.C)
    piv_idx = [cells.index(p) for p in pivots]
    c_idx = [i for i in range(len(cells)) if i not in piv_idx]
    allowed = []
    for tup in itertools.product(range(modulus), repeat=len(cells)):
        rest = tuple(tup[i] for i in piv_idx)
        if (f.get(rest, 0) + sum(tup[i] for i in c_idx)) % modulus == 0:
            allowed.append(tup)
    return TepRule(shape, tuple(range(modulus)), frozenset(allowed), name="sum+f")


# -- local patterns ------------------------------------------------------------


def locally_valid(ctx: GroupContext, rule: TepRule, values: Dict[Element, object]) -> bool:
    """Every fully contained shape translate carries an allowed pattern."""
    domain = frozenset(values)
    cells = rule.cells()
    inv = ctx.inverse(cells[0])
    seen = set()
    for x in domain:
        g = ctx.multiply(x, inv)
        if g in seen:
            continue
        seen.add(g)
        window = [ctx.multiply(g, s) for s in cells]
        if all(w in domain for w in window):
            if not rule.is_allowed(tuple(values[w] for w in window)):
                return False
    return True


def deduce_closure(
    ctx: GroupContext, rule: TepRule, values: Dict[Element, object], rng=None
) -> Dict[Element, object]:
    """Extend a locally valid pattern over the filling closure of its domain.

    Each filling step has a unique completion by the TEP property, and by
    confluence the result does not depend on the step order (``rng``
    randomises the order, for exactly that check).
    """
    from .core import filling_closure

    out = dict(values)
    domain = frozenset(values)
    closure, trace = filling_closure(ctx, rule.shape, domain, rng=rng)
    cells = rule.cells()
    tables = {c: rule.completion_table(c) for c in rule.shape.C}
    for step in trace:
        (added,) = tuple(step.added)
        c = next(s for s in cells if ctx.multiply(step.g, s) == added)
        rest = tuple(
            out[ctx.multiply(step.g, s)] for s in cells if s != c
        )
        out[added] = tables[c][rest]
    return out


# -- envelope enumeration --------------------------------------------------------


def enumerate_valid(
    ctx: GroupContext,
    rule: TepRule,
    D: Pattern,
    budget: int = 1 << 20,
) -> Tuple[List[Element], List[Dict[Element, object]]]:
    """All locally valid assignments on the convex envelope D.

    Returns (free_cells, patterns).  Cells are visited in a half-plane sweep
    order; a cell whose window completion is forced gets deduced, the rest
    are free.  For a TEP rule the free cells form a filling basis of D, so
    the count is |A|^|free|.
    """
    cells = rule.cells()
    order = sorted(D, key=lambda c: (c[0] + 2 * c[1], c[0], c[1]) if isinstance(c, tuple) and len(c) == 2 and isinstance(c[0], int) else ctx.sort_key(c))
    tables = {c: rule.completion_table(c) for c in rule.shape.C}
    inv = {s: ctx.inverse(s) for s in cells}

    free: List[Element] = []
    deduced: List[Tuple[Element, Element, object]] = []  # (cell, translate g, corner)
    known: Set[Element] = set()
    for x in order:
        forced = None
        for c in rule.shape.C:
            g = ctx.multiply(x, inv[c])
            window = [ctx.multiply(g, s) for s in cells]
            if all(w in known or w == x for w in window):
                forced = (x, g, c)
                break
        if forced is None:
            free.append(x)
        else:
            deduced.append(forced)
        known.add(x)

    count = len(rule.alphabet) ** len(free)
    if count > budget:
        raise BudgetError(
            f"{len(rule.alphabet)}^{len(free)} assignments exceed the budget"
        )
    patterns = []
    for assign in itertools.product(rule.alphabet, repeat=len(free)):
        vals: Dict[Element, object] = dict(zip(free, assign))
        ok = True
        for x, g, c in deduced:
            rest = tuple(vals[ctx.multiply(g, s)] for s in cells if s != c)
            vals[x] = tables[c][rest]
        patterns.append(vals)
    return free, patterns


def is_independent(
    ctx: GroupContext, rule: TepRule, T: Pattern, D: Pattern, budget: int = 1 << 20
) -> bool:
    """True iff every assignment on T occurs among the valid D-patterns."""
    T = sorted(T)
    if not set(T) <= set(D):
        raise ValueError("T must sit inside the envelope D")
    _, patterns = enumerate_valid(ctx, rule, D, budget)
    seen = {tuple(v[t] for t in T) for v in patterns}
    return len(seen) == len(rule.alphabet) ** len(T)


def spanned_set(
    ctx: GroupContext, rule: TepRule, P: Pattern, D: Pattern, budget: int = 1 << 20
) -> Pattern:
    """Cells of D whose value is determined by the restriction to P."""
    if not set(P) <= set(D):
        raise ValueError("P must sit inside the envelope D")
    P = sorted(P)
    _, patterns = enumerate_valid(ctx, rule, D, budget)
    groups: Dict[Tuple, List[Dict]] = {}
    for v in patterns:
        groups.setdefault(tuple(v[p] for p in P), []).append(v)
    determined = set(D)
    for members in groups.values():
        first = members[0]
        for v in members[1:]:
            for cell in list(determined):
                if v[cell] != first[cell]:
                    determined.discard(cell)
    return frozenset(determined)


def is_filling_basis(
    ctx: GroupContext, rule: TepRule, T: Pattern, D: Pattern, budget: int = 1 << 20
) -> bool:
    return fill_of(ctx, rule.shape, frozenset(T)) == frozenset(D) and is_independent(
        ctx, rule, T, D, budget
    )


# -- base changes and simple permutations -------------------------------------------


def base_change_bijection(
    ctx: GroupContext, rule: TepRule, P: Sequence[Element], Q: Sequence[Element], D: Pattern
) -> Dict[Assignment, Assignment]:
    """The natural bijection contents(P) -> contents(Q) for filling bases."""
    P = list(P)
    Q = list(Q)
    if fill_of(ctx, rule.shape, frozenset(P)) != frozenset(D):
        raise ValueError("P is not a filling basis of D")
    if fill_of(ctx, rule.shape, frozenset(Q)) != frozenset(D):
        raise ValueError("Q is not a filling basis of D")
    out: Dict[Assignment, Assignment] = {}
    for assign in itertools.product(rule.alphabet, repeat=len(P)):
        full = deduce_closure(ctx, rule, dict(zip(P, assign)))
        out[assign] = tuple(full[q] for q in Q)
    return out


@dataclass(frozen=True)
class SimplePermStep:
    """A permutation of the contents of at most k tracked cells."""

    cells: Tuple[int, ...]  # indices into the tracked cell list
    table: Tuple[Tuple[Assignment, Assignment], ...]  # bijection on those cells

    def apply(self, state: Tuple) -> Tuple:
        key = tuple(state[i] for i in self.cells)
        mapping = dict(self.table)
        image = mapping[key]
        out = list(state)
        for i, v in zip(self.cells, image):
            out[i] = v
        return tuple(out)


def compile_simple_perms(
    ctx: GroupContext,
    rule: TepRule,
    start: Sequence[Element],
    trace: Sequence[MoveRecord],
) -> Tuple[List[SimplePermStep], List[Element]]:
    """Compile a solitaire trace into simple permutations of cell contents.

    Cell i of the state tracks a marble of the start basis.  A move reads
    the window cells other than the filled hole and rewrites the tracker of
    the vacated marble, so it touches |S| - 1 trackers: for three-cell
    shapes that is already a simple 2-permutation (3-permutations are
    allowed for binary alphabets anyway).  Larger shapes would need the
    gate decomposition of general reversible-circuit theory, which this
    engine does not provide.  Returns the steps and the final cell order.
    """
    cells = rule.cells()
    limit = 3 if len(rule.alphabet) == 2 else 2
    if len(cells) - 1 > limit:
        raise NotImplementedError(
            f"factoring {len(cells) - 1}-cell window permutations into "
            f"{limit}-cell steps is not supported"
        )
    tables = {c: rule.completion_table(c) for c in rule.shape.C}
    positions = list(start)
    steps: List[SimplePermStep] = []
    for mv in trace:
        src = positions.index(mv.vacated)
        window = [ctx.multiply(mv.g, s) for s in cells]
        corner = next(s for s in cells if ctx.multiply(mv.g, s) == mv.filled)
        reads = [
            positions.index(w)
            for w in window
            if w != mv.filled and w != mv.vacated
        ]
        touched = tuple(sorted(set(reads + [src])))
        table = []
        for vals in itertools.product(rule.alphabet, repeat=len(touched)):
            state = dict(zip(touched, vals))
            rest = []
            for s, w in zip(cells, window):
                if s == corner:
                    continue
                rest.append(state[src] if w == mv.vacated else state[positions.index(w)])
            image = dict(state)
            image[src] = tables[corner][tuple(rest)]
            table.append(
                (
                    tuple(state[i] for i in touched),
                    tuple(image[i] for i in touched),
                )
            )
        images = [b for _, b in table]
        if len(set(images)) != len(images):
            raise RuleError("window update is not bijective; rule table corrupt")
        steps.append(SimplePermStep(touched, tuple(table)))
        positions[src] = mv.filled
    return steps, positions


def apply_simple_perms(steps: Sequence[SimplePermStep], state: Tuple) -> Tuple:
    for step in steps:
        state = step.apply(state)
    return state
