"""Batch command-line front end.

Subcommands parse JSON files (or stdin), dispatch to the engine and print a
single JSON document.  Exit codes: 0 success, 1 domain error (illegal move,
budget, unsatisfiable request), 2 usage error (bad arguments or JSON).
``serve`` answers newline-delimited JSON requests on stdin, one response
per line, until EOF; the browser playground drives this protocol.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import contours as co
from . import explorer as ex
from . import serialization as ser
from . import square as sq
from . import tep as tep_mod
from . import triangle as tri
from .core import (
    BudgetError,
    IllegalMoveError,
    Shape,
    excess,
    filling_closure,
    legal_moves,
    rank_exact,
    replay,
)
from .groups import GroupContext, GroupError


class DomainError(RuntimeError):
    pass


def _load(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ser.FormatError(f"{path}: {exc}")


def _emit(obj, out_path: Optional[str]) -> None:
    text = ser.dumps(obj)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _shape_and_pattern(args):
    shape_data = _load(args.shape) if args.shape else None
    if shape_data is None:
        ctx, shape = tri.CTX, tri.TRIANGLE
    else:
        ctx, shape = ser.shape_from_json(shape_data)
    P = ser.pattern_from_json(ctx, _load(args.input))
    return ctx, shape, P


def _zd_pattern(args):
    ctx = GroupContext("Zd", 2)
    return ctx, ser.pattern_from_json(ctx, _load(args.input))


# -- subcommand handlers ---------------------------------------------------------


def cmd_fill(args):
    ctx, shape, P = _shape_and_pattern(args)
    rng = None if args.shuffle_seed is None else __import__("random").Random(args.shuffle_seed)
    closure, steps = filling_closure(ctx, shape, P, step_cap=args.step_cap, rng=rng)
    _emit(
        {
            "closure": ser.cells_to_json(ctx, closure),
            "trace": ser.fill_trace_to_json(ctx, steps),
        },
        args.output,
    )


def cmd_moves(args):
    ctx, shape, P = _shape_and_pattern(args)
    moves = legal_moves(ctx, shape, P)
    _emit({"moves": [ser.move_to_json(ctx, m) for m in moves]}, args.output)


def cmd_replay(args):
    ctx, shape, P = _shape_and_pattern(args)
    trace = ser.trace_from_json(ctx, _load(args.trace))
    end = replay(ctx, shape, P, trace)
    _emit(
        {"endpoint": ser.cells_to_json(ctx, end), "legal": True, "moves": len(trace)},
        args.output,
    )


def cmd_excess(args):
    ctx, shape, P = _shape_and_pattern(args)
    if shape.S == tri.TRIANGLE_CELLS and shape.C == tri.TRIANGLE_CELLS:
        r = tri.triangle_rank(P)
    elif shape.S == sq.SQUARE_CELLS and shape.C == sq.SQUARE_CELLS:
        r = sq.square_rank(P)
    else:
        r = rank_exact(ctx, shape, P, size_limit=args.size_limit)
    _emit({"rank": r, "excess": len(P) - r}, args.output)


def cmd_triangle(args):
    ctx, P = _zd_pattern(args)
    if args.op == "identify":
        _emit({"components": tri.identify_orbit(P).to_json()}, args.output)
    elif args.op == "path":
        trace = tri.canonical_path(P, fast=args.fast)
        _emit(ser.trace_to_json(ctx, trace), args.output)
    elif args.op == "member-line":
        _emit({"member": tri.line_orbit_member(P)}, args.output)


def cmd_square(args):
    ctx, P = _zd_pattern(args)
    if args.op == "identify":
        _emit({"components": sq.square_identify_orbit(P).to_json()}, args.output)
    elif args.op == "path":
        trace = sq.square_canonical_path(P)
        _emit(ser.trace_to_json(ctx, trace), args.output)
    elif args.op == "member-cross":
        _emit({"member": sq.cross_member(P)}, args.output)


def cmd_contour(args):
    ctx, shape, P = _shape_and_pattern(args)
    if args.op == "compute":
        c = ser.element_from_json(ctx, json.loads(args.corner))
        cells = co.contour(ctx, shape, P, c)
        _emit({"contour": ser.cells_to_json(ctx, cells)}, args.output)
    elif args.op == "swap":
        cmin = ser.element_from_json(ctx, json.loads(args.corner))
        cmax = ser.element_from_json(ctx, json.loads(args.corner_max))
        if args.order:
            order = co.BiInvariantOrder.from_json(_load(args.order))
        else:
            order = co.order_extremizing(shape.S, cmin, cmax)
            if order is None:
                raise DomainError("not sweep swappable under any order")
        moves = co.sweep_swap(ctx, shape, P, cmin, cmax, order)
        _emit(ser.trace_to_json(ctx, moves), args.output)


def cmd_orbit(args):
    if args.op == "count-free-line":
        _emit({"n": args.n, "count": ex.free_line_orbit_count(args.n)}, args.output)
        return
    ctx, shape, P = _shape_and_pattern(args)
    graph = ex.orbit_bfs(ctx, shape, P, max_vertices=args.max)
    out = {"size": graph.size, "truncated": graph.truncated}
    if args.op == "diameter":
        out["diameter"] = ex.orbit_diameter(graph)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(ex.graph_to_dot(ctx, graph) + "\n")
    if args.adjacency:
        with open(args.adjacency, "w") as fh:
            fh.write(ser.dumps(ex.graph_to_adjacency(ctx, graph)) + "\n")
    _emit(out, args.output)


def cmd_tep(args):
    ctx, shape, _ = (tri.CTX, tri.TRIANGLE, None)
    if args.shape:
        ctx, shape = ser.shape_from_json(_load(args.shape))
    rule = ser.rule_from_json(shape, _load(args.rule))
    if args.op == "check-indep":
        T = ser.pattern_from_json(ctx, _load(args.input))
        D = ser.pattern_from_json(ctx, _load(args.domain))
        _emit({"independent": tep_mod.is_independent(ctx, rule, T, D, args.budget)}, args.output)
    elif args.op == "span":
        P = ser.pattern_from_json(ctx, _load(args.input))
        D = ser.pattern_from_json(ctx, _load(args.domain))
        spanned = tep_mod.spanned_set(ctx, rule, P, D, args.budget)
        _emit({"spanned": ser.cells_to_json(ctx, spanned)}, args.output)
    elif args.op == "basis":
        T = ser.pattern_from_json(ctx, _load(args.input))
        D = ser.pattern_from_json(ctx, _load(args.domain))
        _emit({"filling_basis": tep_mod.is_filling_basis(ctx, rule, T, D, args.budget)}, args.output)
    elif args.op == "compile-perms":
        P = sorted(ser.pattern_from_json(ctx, _load(args.input)), key=ctx.sort_key)
        trace = ser.trace_from_json(ctx, _load(args.trace))
        steps, final = tep_mod.compile_simple_perms(ctx, rule, P, trace)
        _emit(
            {
                "steps": [
                    {
                        "cells": list(s.cells),
                        "table": [[list(a), list(b)] for a, b in s.table],
                    }
                    for s in steps
                ],
                "order": ser.cells_to_json(ctx, final),
            },
            args.output,
        )


def cmd_serve(args):
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        try:
            req = json.loads(line)
            resp = _serve_one(req)
            resp["ok"] = True
        except Exception as exc:  # protocol errors go to the client
            resp = {"ok": False, "error": str(exc)}
        sys.stdout.write(ser.dumps(resp) + "\n")
        sys.stdout.flush()


def _serve_one(req: dict) -> dict:
    op = req.get("op")
    ctx, shape = ser.shape_from_json(req["shape"])
    P = ser.cells_from_json(ctx, req.get("pattern", []))
    if op == "legal_moves":
        return {"moves": [ser.move_to_json(ctx, m) for m in legal_moves(ctx, shape, P)]}
    if op == "apply":
        move = ser.move_from_json(ctx, req["move"])
        from .core import apply_move

        Q = apply_move(ctx, shape, P, move)
        return {"pattern": ser.cells_to_json(ctx, Q)}
    if op == "fill":
        closure, _ = filling_closure(ctx, shape, P, step_cap=req.get("step_cap"))
        return {"closure": ser.cells_to_json(ctx, closure)}
    if op == "identify":
        if shape.S == tri.TRIANGLE_CELLS:
            return {"kind": "triangle", "components": tri.identify_orbit(P).to_json()}
        if shape.S == sq.SQUARE_CELLS:
            return {"kind": "square", "components": sq.square_identify_orbit(P).to_json()}
        r = rank_exact(ctx, shape, P)
        return {"kind": "generic", "rank": r, "excess": len(P) - r}
    if op == "path":
        if shape.S == tri.TRIANGLE_CELLS:
            trace = tri.canonical_path(P)
        elif shape.S == sq.SQUARE_CELLS:
            trace = sq.square_canonical_path(P)
        else:
            raise DomainError("canonical paths exist for the triangle and square shapes")
        return ser.trace_to_json(ctx, trace)
    if op == "hull":
        return {"hull": ser.cells_to_json(ctx, co.s_hull(shape, P))}
    if op == "contour":
        # Playground overlay: the contour of the filling closure, taken at
        # the requested corner (default: the largest hull corner).
        closure, _ = filling_closure(ctx, shape, P, step_cap=req.get("step_cap"))
        if "corner" in req:
            corner = ser.element_from_json(ctx, req["corner"])
        else:
            corner = max(co.corners(shape.S))
        cells = co.contour(ctx, shape, closure, corner)
        return {
            "contour": ser.cells_to_json(ctx, cells),
            "corner": ser.element_to_json(ctx, corner),
        }
    raise ser.FormatError(f"unknown op {op!r}")


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="solitaire", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, shape=True, trace=False):
        sp.add_argument("-i", "--input", required=True, help="pattern JSON file or -")
        if shape:
            sp.add_argument("-s", "--shape", help="shape JSON file")
        if trace:
            sp.add_argument("-t", "--trace", required=True, help="trace JSON file")
        sp.add_argument("-o", "--output", help="write the JSON result here")

    sp = sub.add_parser("fill", help="filling closure and trace")
    common(sp)
    sp.add_argument("--step-cap", type=int, default=None)
    sp.add_argument(
        "--shuffle-seed",
        type=int,
        default=None,
        help="randomise the fill order (the closure is order-independent)",
    )
    sp.set_defaults(fn=cmd_fill)

    sp = sub.add_parser("moves", help="legal solitaire moves")
    common(sp)
    sp.set_defaults(fn=cmd_moves)

    sp = sub.add_parser("replay", help="replay and validate a trace")
    common(sp, trace=True)
    sp.set_defaults(fn=cmd_replay)

    sp = sub.add_parser("excess", help="rank and excess")
    common(sp)
    sp.add_argument("--size-limit", type=int, default=22)
    sp.set_defaults(fn=cmd_excess)

    sp = sub.add_parser("triangle", help="triangle-shape theory")
    sp.add_argument("op", choices=["identify", "path", "member-line"])
    common(sp, shape=False)
    sp.add_argument("--fast", action="store_true", help="single-component fast path")
    sp.set_defaults(fn=cmd_triangle)

    sp = sub.add_parser("square", help="square-shape theory")
    sp.add_argument("op", choices=["identify", "path", "member-cross"])
    common(sp, shape=False)
    sp.set_defaults(fn=cmd_square)

    sp = sub.add_parser("contour", help="contours and sweep swaps")
    sp.add_argument("op", choices=["compute", "swap"])
    common(sp)
    sp.add_argument("--corner", required=True, help="corner cell as JSON, e.g. [0,1]")
    sp.add_argument("--corner-max", help="target corner for swap")
    sp.add_argument("--order", help="order JSON file {stages: [...]}")
    sp.set_defaults(fn=cmd_contour)

    sp = sub.add_parser("orbit", help="exhaustive orbit exploration")
    sp.add_argument("op", choices=["bfs", "diameter", "count-free-line"])
    sp.add_argument("-i", "--input", help="pattern JSON file")
    sp.add_argument("-s", "--shape", help="shape JSON file")
    sp.add_argument("--max", type=int, default=200000, help="vertex budget")
    sp.add_argument("-n", type=int, default=5, help="line length for count-free-line")
    sp.add_argument("--dot", help="export the orbit graph as DOT")
    sp.add_argument("--adjacency", help="export the orbit graph as JSON adjacency")
    sp.add_argument("-o", "--output")
    sp.set_defaults(fn=cmd_orbit)

    sp = sub.add_parser("tep", help="TEP independence and spanning")
    sp.add_argument("op", choices=["check-indep", "span", "basis", "compile-perms"])
    common(sp)
    sp.add_argument("--rule", required=True, help="rule JSON file")
    sp.add_argument("--domain", help="envelope pattern JSON file")
    sp.add_argument("--trace", help="trace JSON (compile-perms)")
    sp.add_argument("--budget", type=int, default=1 << 20)
    sp.set_defaults(fn=cmd_tep)

    sp = sub.add_parser("serve", help="newline-delimited JSON protocol on stdio")
    sp.set_defaults(fn=cmd_serve)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.fn(args)
    except ser.FormatError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (IllegalMoveError, BudgetError, DomainError, GroupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
