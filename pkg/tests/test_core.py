import random

import pytest

from solitaire.core import (
    BudgetError,
    IllegalMoveError,
    MoveRecord,
    Shape,
    apply_move,
    check_move,
    excess,
    excess_sets,
    fill_of,
    filling_closure,
    legal_moves,
    monotone_replay,
    pattern,
    rank_exact,
    replay,
    visible_excess,
)
from solitaire.groups import GroupContext
from solitaire import triangle as tri

from oracles import brute_rank

Z2 = GroupContext("Zd", 2)
F2 = GroupContext("free", 2)
TRI = tri.TRIANGLE
SQ = Shape.make(Z2, [(0, 0), (1, 0), (0, 1), (1, 1)])
PLUS = Shape.make(
    Z2,
    [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)],
    [(1, 0), (-1, 0), (0, 1), (0, -1)],
)
FREE_TRI = Shape.make(F2, [(), (1,), (2,)])


def random_pattern(rng, span=4, max_size=8):
    n = rng.randint(1, max_size)
    return pattern((rng.randint(-span, span), rng.randint(-span, span)) for _ in range(n))


def test_moves_on_two_cell_line():
    moves = legal_moves(Z2, TRI, pattern([(0, 0), (1, 0)]))
    assert len(moves) == 2
    assert {m.vacated for m in moves} == {(0, 0), (1, 0)}
    assert all(m.filled == (0, 1) and m.g == (0, 0) for m in moves)


def test_full_window_has_no_move():
    moves = legal_moves(Z2, TRI, pattern([(0, 0), (1, 0), (0, 1)]))
    assert moves == []


def test_plus_shape_center_is_pivot_only():
    # C excludes the center, so the center cell is never vacated or filled.
    P = pattern([(0, 0), (1, 0), (-1, 0), (0, 1)])  # hole at (0,-1) in C
    moves = legal_moves(Z2, PLUS, P)
    assert moves, "plus shape should admit moves here"
    for m in moves:
        assert m.vacated != m.g and m.filled != m.g  # g is the center cell


def test_apply_and_reverse():
    P = pattern([(0, 0), (1, 0)])
    m = legal_moves(Z2, TRI, P)[0]
    Q = apply_move(Z2, TRI, P, m)
    assert len(Q) == len(P)
    assert apply_move(Z2, TRI, Q, m.reversed()) == P


def test_illegal_move_diagnostics():
    P = pattern([(0, 0), (1, 0)])
    with pytest.raises(IllegalMoveError):
        apply_move(Z2, TRI, P, MoveRecord((0, 0), (5, 5), (0, 1)))
    with pytest.raises(IllegalMoveError):
        apply_move(Z2, TRI, P, MoveRecord((3, 3), (0, 0), (0, 1)))


def test_line_replay_sequence():
    # A short valid sequence from L4, replayed through strict legality.
    P = pattern([(0, 0), (1, 0), (2, 0), (3, 0)])
    trace = [
        MoveRecord((0, 0), (0, 0), (0, 1)),
        MoveRecord((1, 0), (1, 0), (1, 1)),
        MoveRecord((0, 1), (0, 1), (0, 2)),
    ]
    end = replay(Z2, TRI, P, trace)
    assert end == pattern([(0, 2), (1, 1), (2, 0), (3, 0)])


def test_filling_line3():
    clo, steps = filling_closure(Z2, TRI, pattern([(0, 0), (1, 0), (2, 0)]))
    assert clo == frozenset(tri.Tri(0, 0, 3).cells())
    assert len(steps) == 3
    # trace replays: applying the steps yields the closure
    cur = {(0, 0), (1, 0), (2, 0)}
    for s in steps:
        (added,) = tuple(s.added)
        assert added not in cur
        cur.add(added)
    assert frozenset(cur) == clo


def test_filling_square_cross():
    clo, _ = filling_closure(Z2, SQ, pattern([(0, 0), (1, 0), (0, 1)]))
    assert clo == frozenset([(0, 0), (1, 0), (0, 1), (1, 1)])


def test_filling_free_triangle_line():
    L3 = frozenset({(), (1,), (1, 1)})
    clo, _ = filling_closure(F2, FREE_TRI, L3)
    assert clo == L3 | {(2,), (1, 2)}


def test_linear_shape_budget_error():
    S = Shape.make(Z2, [(0, 0), (1, 1), (2, 2)])
    with pytest.raises(BudgetError) as err:
        filling_closure(Z2, S, pattern([(0, 0), (1, 1)]), step_cap=25)
    assert "linear" in str(err.value)


def test_rank_and_excess():
    assert excess(Z2, TRI, pattern([(i, 0) for i in range(4)])) == 0
    T2 = pattern([(0, 0), (1, 0), (0, 1)])
    assert rank_exact(Z2, TRI, T2) == 2
    assert excess(Z2, TRI, T2) == 1
    far = pattern([(0, 0), (9, 9)])
    assert excess(Z2, TRI, far) == 0


def test_rank_agrees_with_bruteforce():
    rng = random.Random(4)
    fill = lambda P: fill_of(Z2, TRI, P)
    for _ in range(30):
        P = random_pattern(rng, span=2, max_size=5)
        if len(fill(P)) > 12:
            continue
        assert rank_exact(Z2, TRI, P) == brute_rank(fill, P)


def test_excess_sets_t2():
    mx, vis = excess_sets(Z2, TRI, pattern([(0, 0), (1, 0), (0, 1)]))
    assert vis == 1
    assert sorted(map(sorted, mx)) == [[(0, 0)], [(0, 1)], [(1, 0)]]


def test_monotone_replay_plain():
    P = pattern([(0, 0), (1, 0)])
    trace = [legal_moves(Z2, TRI, P)[0]]
    end, where = monotone_replay(Z2, TRI, P, trace, frozenset())
    assert end == replay(Z2, TRI, P, trace)
    assert where == {}


def test_monotone_replay_untouched_extra():
    P = pattern([(0, 0), (1, 0)])
    trace = [legal_moves(Z2, TRI, P)[0]]
    extra = frozenset({(9, 9)})
    end, where = monotone_replay(Z2, TRI, P, trace, extra)
    assert where == {(9, 9): (9, 9)}
    assert (9, 9) in end


def test_monotone_replay_displaced_extra():
    # The extra sits exactly on the planned target; it swaps roles.
    P = pattern([(0, 0), (1, 0)])
    m = MoveRecord((0, 0), (1, 0), (0, 1))
    extra = frozenset({(0, 1)})
    end, where = monotone_replay(Z2, TRI, P, [m], extra)
    assert end == P | extra  # physically unchanged
    assert where == {(0, 1): (1, 0)}
    # and the plain endpoint is contained in the result
    assert replay(Z2, TRI, P, [m]) <= end


def test_monotone_replay_rejects_bad_trace():
    P = pattern([(0, 0), (1, 0)])
    bad = [MoveRecord((7, 7), (7, 7), (7, 8))]
    with pytest.raises(IllegalMoveError):
        monotone_replay(Z2, TRI, P, bad, frozenset())


# -- structural invariants ------------------------------------------------------


def test_reversibility_and_cardinality():
    rng = random.Random(1)
    for _ in range(60):
        P = random_pattern(rng)
        for m in legal_moves(Z2, TRI, P):
            Q = apply_move(Z2, TRI, P, m)
            assert len(Q) == len(P)
            assert apply_move(Z2, TRI, Q, m.reversed()) == P


def test_closure_laws_and_orbit_invariance():
    rng = random.Random(2)
    for _ in range(40):
        P = random_pattern(rng, span=3, max_size=6)
        Q = P | random_pattern(rng, span=3, max_size=3)
        fp = fill_of(Z2, TRI, P)
        assert P <= fp
        assert fp <= fill_of(Z2, TRI, Q)
        assert fill_of(Z2, TRI, fp) == fp
        for m in legal_moves(Z2, TRI, P)[:4]:
            assert fill_of(Z2, TRI, apply_move(Z2, TRI, P, m)) == fp


def test_substitution_law():
    rng = random.Random(3)
    done = 0
    while done < 20:
        P = random_pattern(rng, span=2, max_size=5)
        moves = legal_moves(Z2, TRI, P)
        if not moves:
            continue
        Q = apply_move(Z2, TRI, P, moves[0])  # same closure as P
        R = random_pattern(rng, span=3, max_size=4)
        assert fill_of(Z2, TRI, P | R) == fill_of(Z2, TRI, Q | R)
        done += 1


def test_excess_monotone():
    rng = random.Random(5)
    for _ in range(15):
        P = random_pattern(rng, span=2, max_size=4)
        Q = P | random_pattern(rng, span=2, max_size=2)
        if len(fill_of(Z2, TRI, Q)) > 14:
            continue
        assert excess(Z2, TRI, P) <= excess(Z2, TRI, Q)
        assert visible_excess(Z2, TRI, P) <= visible_excess(Z2, TRI, Q)


def test_coset_independence():
    # The doubled triangle moves within cosets of the even sublattice: a
    # two-coset union has exactly the union of the per-coset moves, and
    # every move leaves the other coset's projection untouched.
    S2 = Shape.make(Z2, [(0, 0), (2, 0), (0, 2)])
    even = pattern([(0, 0), (2, 0)])
    odd = pattern([(1, 1), (3, 1), (1, 3)])
    union_moves = set(legal_moves(Z2, S2, even | odd))
    assert union_moves == set(legal_moves(Z2, S2, even)) | set(
        legal_moves(Z2, S2, odd)
    )
    for m in union_moves:
        par = (m.vacated[0] % 2, m.vacated[1] % 2)
        assert (m.filled[0] % 2, m.filled[1] % 2) == par
        Q = apply_move(Z2, S2, even | odd, m)
        if par == (0, 0):
            assert {c for c in Q if c[0] % 2 == 1} == set(odd)
        else:
            assert {c for c in Q if c[0] % 2 == 0} == set(even)


def test_hull_bound():
    from solitaire.contours import s_hull

    rng = random.Random(6)
    for shape in (TRI, SQ):
        for _ in range(20):
            P = random_pattern(rng, span=3, max_size=6)
            assert fill_of(Z2, shape, P) <= s_hull(shape, P)
