import itertools
import random

import pytest

from solitaire.core import apply_move, legal_moves, pattern, replay
from solitaire.groups import GroupContext
from solitaire import square as sq

from oracles import BitBoard

Z2 = GroupContext("Zd", 2)


def test_decomposition_cross():
    P = [(0, 0), (1, 0), (2, 0), (0, 1)]
    comps = sq.rect_decomposition(P)
    assert comps == [sq.Rect(0, 0, 3, 2)]


def test_decomposition_single_point():
    assert sq.rect_decomposition([(5, 5)]) == [sq.Rect(5, 5, 1, 1)]


def test_diagonal_pair_stays_separate():
    comps = sq.rect_decomposition([(0, 0), (1, 1)])
    assert len(comps) == 2
    from solitaire.core import fill_of

    assert fill_of(Z2, sq.SQUARE, pattern([(0, 0), (1, 1)])) == {(0, 0), (1, 1)}


def test_collinear_cells_one_rectangle():
    comps = sq.rect_decomposition([(0, 0), (0, 1), (0, 2)])
    assert comps == [sq.Rect(0, 0, 1, 3)]


def test_decomposition_size_inequality():
    rng = random.Random(0)
    for _ in range(200):
        n = rng.randint(1, 9)
        P = pattern((rng.randint(0, 5), rng.randint(0, 5)) for _ in range(n))
        comps = sq.rect_decomposition(P)
        assert sum(r.w + r.h - 1 for r in comps) <= len(P)


def test_labk_cells():
    l540 = sq.labk_cells(5, 4, 0)
    assert len(l540) == 8
    assert set(l540) == {(i, 0) for i in range(5)} | {(0, j) for j in range(4)}
    l542 = set(sq.labk_cells(5, 4, 2))
    assert l542 - set(l540) == {(1, 1), (2, 1)}
    with pytest.raises(ValueError):
        sq.labk_cells(2, 2, 2)


def test_identify_examples():
    l540 = pattern(sq.labk_cells(5, 4, 0))
    assert sq.square_identify_orbit(l540).to_pattern() == l540
    block = pattern([(0, 0), (1, 0), (0, 1), (1, 1)])
    nf = sq.square_identify_orbit(block)
    assert nf.to_json() == [{"v": [0, 0], "a": 2, "b": 2, "k": 1}]


def test_identify_orbit_invariant():
    rng = random.Random(1)
    for _ in range(40):
        n = rng.randint(2, 7)
        P = pattern((rng.randint(0, 4), rng.randint(0, 4)) for _ in range(n))
        nf = sq.square_identify_orbit(P)
        for m in legal_moves(Z2, sq.SQUARE, P)[:5]:
            assert sq.square_identify_orbit(apply_move(Z2, sq.SQUARE, P, m)) == nf


def test_cross_member():
    cross = pattern([(0, 0), (1, 0), (2, 0), (1, 1), (1, 2)])
    assert sq.cross_member(cross)
    assert not sq.cross_member(pattern([(0, 0), (1, 0), (0, 1), (1, 1)]))


def test_shift_plans():
    # vertical line of a cross slides to any column and back
    r = sq.Rect(0, 0, 4, 3)
    cross0 = frozenset(sq._Cross(r, 0, 0).line())
    plan = sq.shift_vert_plan(r, 0, 0, 3)
    end = replay(Z2, sq.SQUARE, cross0, plan)
    assert end == frozenset(sq._Cross(r, 3, 0).line())
    back = sq.shift_vert_plan(r, 0, 3, 0)
    assert replay(Z2, sq.SQUARE, end, back) == cross0


def test_canonical_path_identity():
    assert sq.square_canonical_path(pattern(sq.labk_cells(4, 3, 2))) == []


def test_canonical_path_right_cross():
    # bottom-right cross normalises to the bottom-left L-shape
    r = sq.Rect(0, 0, 4, 3)
    P = frozenset(sq._Cross(r, 3, 0).line())
    trace = sq.square_canonical_path(P)
    assert replay(Z2, sq.SQUARE, P, trace) == pattern(sq.labk_cells(4, 3, 0))


def test_canonical_path_random_replay():
    rng = random.Random(9)
    for _ in range(120):
        n = rng.randint(1, 9)
        span = rng.choice([2, 3, 5])
        P = pattern((rng.randint(0, span), rng.randint(0, span)) for _ in range(n))
        trace = sq.square_canonical_path(P)
        assert replay(Z2, sq.SQUARE, P, trace) == sq.square_identify_orbit(P).to_pattern()


def test_cross_transport():
    # all crosses filling the same rectangle are BFS-connected (up to 4x4)
    for a, b in [(2, 2), (3, 2), (3, 3), (4, 3), (4, 4)]:
        board = BitBoard(sq.Rect(0, 0, a, b).cells(), sorted(sq.SQUARE.S))
        crosses = []
        for cx in range(a):
            for ry in range(b):
                cells = {(x, ry) for x in range(a)} | {(cx, y) for y in range(b)}
                crosses.append(frozenset(cells))
        orbit = board.orbit(board.to_mask(crosses[0]))
        for c in crosses[1:]:
            assert board.to_mask(c) in orbit, (a, b, sorted(c))
