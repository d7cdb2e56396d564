"""JSON wire formats shared by the CLI and the serve protocol."""

from __future__ import annotations

import json
from typing import Dict, List, Optional, Sequence, Tuple

from .core import FillStep, MoveRecord, Pattern, Shape
from .groups import GroupContext, GroupError
from . import tep as tep_mod


class FormatError(ValueError):
    pass


def group_from_json(data: Optional[dict]) -> GroupContext:
    if data is None:
        return GroupContext("Zd", 2)
    try:
        return GroupContext.from_json(data)
    except (KeyError, TypeError, GroupError) as exc:
        raise FormatError(f"bad group descriptor: {exc}")


def element_from_json(ctx: GroupContext, data):
    try:
        return ctx.parse_element(data)
    except GroupError as exc:
        raise FormatError(str(exc))


def element_to_json(ctx: GroupContext, x):
    return ctx.element_to_json(x)


def cells_from_json(ctx: GroupContext, data) -> frozenset:
    if not isinstance(data, list):
        raise FormatError(f"expected a list of cells, got {type(data).__name__}")
    return frozenset(element_from_json(ctx, c) for c in data)


def cells_to_json(ctx: GroupContext, cells) -> list:
    return [element_to_json(ctx, c) for c in sorted(cells, key=ctx.sort_key)]


def shape_from_json(data: dict) -> Tuple[GroupContext, Shape]:
    if "shape" in data and "S" not in data:
        inner = dict(data["shape"])
        inner.setdefault("group", data.get("group"))
        data = inner
    if "S" not in data:
        raise FormatError("shape object needs an 'S' field")
    ctx = group_from_json(data.get("group"))
    S = cells_from_json(ctx, data["S"])
    C_field = data.get("C", "same")
    C = S if C_field == "same" else cells_from_json(ctx, C_field)
    try:
        return ctx, Shape(ctx, S, C)
    except GroupError as exc:
        raise FormatError(str(exc))


def shape_to_json(ctx: GroupContext, shape: Shape) -> dict:
    out = {"group": ctx.to_json(), "S": cells_to_json(ctx, shape.S)}
    out["C"] = "same" if shape.C == shape.S else cells_to_json(ctx, shape.C)
    return out


def pattern_from_json(ctx: GroupContext, data) -> Pattern:
    if isinstance(data, dict):
        data = data.get("pattern")
    return cells_from_json(ctx, data)


def move_to_json(ctx: GroupContext, m: MoveRecord) -> dict:
    return {
        "g": element_to_json(ctx, m.g),
        "from": element_to_json(ctx, m.vacated),
        "to": element_to_json(ctx, m.filled),
    }


def move_from_json(ctx: GroupContext, data: dict) -> MoveRecord:
    try:
        return MoveRecord(
            element_from_json(ctx, data["g"]),
            element_from_json(ctx, data["from"]),
            element_from_json(ctx, data["to"]),
        )
    except KeyError as exc:
        raise FormatError(f"move object missing {exc}")


def trace_to_json(ctx: GroupContext, trace: Sequence[MoveRecord]) -> dict:
    return {"trace": [move_to_json(ctx, m) for m in trace]}


def trace_from_json(ctx: GroupContext, data) -> List[MoveRecord]:
    if isinstance(data, dict):
        data = data.get("trace")
    if not isinstance(data, list):
        raise FormatError("expected a trace list")
    return [move_from_json(ctx, m) for m in data]


def fill_trace_to_json(ctx: GroupContext, steps: Sequence[FillStep]) -> list:
    return [
        {
            "g": element_to_json(ctx, s.g),
            "added": cells_to_json(ctx, s.added),
        }
        for s in steps
    ]


def rule_from_json(shape: Shape, data: dict) -> "tep_mod.TepRule":
    kind = data.get("kind")
    if kind == "abelian_sum":
        return tep_mod.abelian_sum_rule(
            shape, int(data["alphabet"]), int(data.get("target", 0))
        )
    if kind == "s3":
        return tep_mod.s3_rule(shape)
    if kind == "table":
        alphabet = tuple(data["alphabet"])
        allowed = frozenset(tuple(row) for row in data["allowed"])
        return tep_mod.TepRule(shape, alphabet, allowed)
    raise FormatError(f"unknown rule kind {kind!r}")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
