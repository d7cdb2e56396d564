"""Exhaustive orbit exploration and counting tools.

The BFS enumerates a solitaire orbit exactly (with explicit truncation
flags), which serves as the verification oracle for the closed-form orbit
characterisations.  The free-group line orbit has a regular-language
description; its size satisfies u(1)=1, u(2)=3, u(n+1)=3u(n)-u(n-1),
which agrees with the closed radical formula (checked in the tests by
exact algebra).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from .core import Pattern, Shape, legal_moves, apply_move
from .groups import Element, GroupContext


class TruncatedOrbitError(RuntimeError):
    pass


@dataclass
class OrbitGraph:
    root: Pattern
    vertices: Set[Pattern]
    edges: Set[FrozenSet[Pattern]]
    truncated: bool
    eccentricity: int  # of the root; only meaningful when not truncated

    @property
    def size(self) -> int:
        return len(self.vertices)


def orbit_bfs(
    ctx: GroupContext,
    shape: Shape,
    P: Pattern,
    max_vertices: Optional[int] = None,
    max_depth: Optional[int] = None,
) -> OrbitGraph:
    """Breadth-first enumeration of the solitaire orbit of P."""
    root = frozenset(P)
    vertices: Set[Pattern] = {root}
    edges: Set[FrozenSet[Pattern]] = set()
    frontier = [root]
    truncated = False
    depth = 0
    while frontier:
        if max_depth is not None and depth >= max_depth:
            truncated = True
            break
        nxt: List[Pattern] = []
        for Q in frontier:
            for mv in legal_moves(ctx, shape, Q):
                R = (Q - {mv.vacated}) | {mv.filled}
                edges.add(frozenset((Q, R)))
                if R not in vertices:
                    if max_vertices is not None and len(vertices) >= max_vertices:
                        truncated = True
                        continue
                    vertices.add(R)
                    nxt.append(R)
        frontier = nxt
        if frontier:
            depth += 1
    return OrbitGraph(root, vertices, edges, truncated, depth)


def graph_to_adjacency(ctx: GroupContext, graph: OrbitGraph) -> dict:
    """JSON-ready adjacency map keyed by serialized patterns."""
    key = lambda P: "|".join(ctx.format_element(c) for c in sorted(P, key=ctx.sort_key))
    adj: Dict[str, List[str]] = {key(v): [] for v in graph.vertices}
    for e in graph.edges:
        a, b = tuple(e)
        adj[key(a)].append(key(b))
        adj[key(b)].append(key(a))
    return {k: sorted(v) for k, v in sorted(adj.items())}


def graph_to_dot(ctx: GroupContext, graph: OrbitGraph) -> str:
    key = lambda P: "|".join(ctx.format_element(c) for c in sorted(P, key=ctx.sort_key))
    lines = ["graph orbit {"]
    for v in sorted(graph.vertices, key=key):
        lines.append(f'  "{key(v)}";')
    for e in sorted(graph.edges, key=lambda e: sorted(map(key, e))):
        a, b = sorted(map(key, e))
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines)


def orbit_diameter(graph: OrbitGraph) -> int:
    """Exact diameter by repeated BFS; refuses truncated graphs."""
    if graph.truncated:
        raise TruncatedOrbitError("diameter of a truncated orbit is undefined")
    adj: Dict[Pattern, List[Pattern]] = {v: [] for v in graph.vertices}
    for e in graph.edges:
        a, b = tuple(e)
        adj[a].append(b)
        adj[b].append(a)
    diameter = 0
    for src in graph.vertices:
        dist = {src: 0}
        frontier = [src]
        d = 0
        while frontier:
            nxt = []
            d += 1
            for v in frontier:
                for w in adj[v]:
                    if w not in dist:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        if len(dist) != len(graph.vertices):
            raise TruncatedOrbitError("orbit graph is not connected")
        diameter = max(diameter, max(dist.values()))
    return diameter


# -- assignment metric ---------------------------------------------------------


def delta_metric(A: Iterable[Tuple[int, int]], B: Iterable[Tuple[int, int]]) -> float:
    """min over bijections f of sum d(a, f(a)), Euclidean distance on Z^2.

    Solved exactly as a linear assignment problem; with at most a few dozen
    points the float tolerance is far below the 1e-6 used by callers.
    """
    import numpy as np
    from scipy.optimize import linear_sum_assignment

    A = sorted(A)
    B = sorted(B)
    if len(A) != len(B):
        raise ValueError("delta metric needs patterns of equal cardinality")
    if not A:
        return 0.0
    cost = np.array(
        [[math.dist(a, b) for b in B] for a in A], dtype=float
    )
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].sum())


def move_count_lower_bound(
    A: Iterable[Tuple[int, int]], B: Iterable[Tuple[int, int]], shape: Shape
) -> float:
    """Δ(A,B) / diam(S): every move displaces one marble by at most diam(S)."""
    cells = list(shape.S)
    diam = max(math.dist(a, b) for a in cells for b in cells)
    return delta_metric(A, B) / diam


# -- free-group triangle line orbit ----------------------------------------------


FREE_CTX = GroupContext("free", 2)
FREE_TRIANGLE_CELLS = frozenset({(), (1,), (2,)})  # {e, a, b}


def free_line(n: int) -> Pattern:
    """L_n = {e, a, a^2, ..., a^(n-1)} in F_2."""
    return frozenset((1,) * i for i in range(n))


def free_line_orbit_count(n: int) -> int:
    """|O(L_n)| for the free triangle, via u(n+1) = 3u(n) - u(n-1)."""
    if n < 1:
        raise ValueError("n must be positive")
    prev, cur = 0, 1
    for _ in range(n - 1):
        prev, cur = cur, 3 * cur - prev
    return cur


def free_line_orbit_member(P: Iterable[Element], n: int) -> bool:
    """Membership in O(L_n) via the E/A/B word encoding.

    Position i carries E (unmoved, cell a^i), B (moved to a^i b) or A
    (moved to a^(i-1) b); valid words avoid the subword BA, start with E
    or B and end with E or A.  Decoding is forced: E iff a^i is present,
    otherwise position i must claim the leftmost unclaimed b-cell.
    """
    P = set(P)
    if len(P) != n:
        return False
    claimed: Set[Element] = set()
    word: List[str] = []
    for i in range(n):
        straight = (1,) * i
        left = (1,) * (i - 1) + (2,) if i >= 1 else None
        right = (1,) * i + (2,)
        if straight in P:
            word.append("E")
        elif left is not None and left in P and left not in claimed:
            word.append("A")
            claimed.add(left)
        elif right in P and right not in claimed:
            word.append("B")
            claimed.add(right)
        else:
            return False
    if word[0] == "A" or word[-1] == "B":
        return False
    used = {(1,) * i for i, w in enumerate(word) if w == "E"} | claimed
    return used == P
