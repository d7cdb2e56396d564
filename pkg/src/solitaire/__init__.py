"""Solitaire of independence: moves, fillings, orbits and TEP subshifts."""

from .groups import GroupContext, GroupError, cyclic_coset_membership
from .core import (
    BudgetError,
    FillStep,
    IllegalMoveError,
    MoveRecord,
    Shape,
    apply_move,
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

__all__ = [
    "GroupContext",
    "GroupError",
    "cyclic_coset_membership",
    "BudgetError",
    "FillStep",
    "IllegalMoveError",
    "MoveRecord",
    "Shape",
    "apply_move",
    "excess",
    "excess_sets",
    "fill_of",
    "filling_closure",
    "legal_moves",
    "monotone_replay",
    "pattern",
    "rank_exact",
    "replay",
    "visible_excess",
]
