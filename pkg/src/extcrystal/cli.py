"""Command-line front end: apply operators, run sweeps, export graphs.

Exit codes are a stable contract: 0 success, 1 verification failure,
2 usage or parse error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json as jsonlib
import os
import re
import sys
from collections import Counter

from .affine import (
    AffineModel,
    HLNode,
    HLWeight,
    format_hl_weight,
    parse_hl_weight,
)
from .extended import format_ext_element, parse_ext_element
from .msegment import format_multisegment, parse_multisegment
from .parsing import ParseError
from .signature import reduce_signature
from .verify import SweepConfig, base_suite_names, run_suite, suite_size

OPS = ("F", "E", "Fstar", "Estar", "Fhl", "Ehl", "shift", "starflip", "gamma", "gammainv", "star")

_WINDOW_RE = re.compile(r"(-?\d+)\.\.(-?\d+)")


def _window_type(text: str) -> tuple[int, int]:
    m = _WINDOW_RE.fullmatch(text.strip())
    if not m:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty window {text!r}")
    return lo, hi


def _seed_type(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _positive_type(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("bound must be non-negative")
    return value


def _rank_type(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("rank must be at least 1")
    return value


def _resolve_jobs(value: int | None) -> int:
    if value is not None:
        return max(1, value)
    env = os.environ.get("EXTCRYSTAL_JOBS", "").strip()
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"EXTCRYSTAL_JOBS must be an integer, got {env!r}") from None
    return 1


def _merge_window_values(argv: list[str]) -> list[str]:
    """Join "--window -2..1" into one token so argparse accepts the dash."""
    out = []
    skip = False
    for pos, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        nxt = argv[pos + 1] if pos + 1 < len(argv) else None
        if tok == "--window" and nxt is not None and _WINDOW_RE.fullmatch(nxt.strip()):
            out.append(f"--window={nxt}")
            skip = True
        else:
            out.append(tok)
    return out


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extcrystal",
        description="Exact combinatorics of extended crystals over multisegments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_apply = sub.add_parser("apply", help="apply one operator to an element given as text")
    p_apply.add_argument("op", choices=OPS)
    p_apply.add_argument("target", help="element text; '' or '1' is the highest element")
    p_apply.add_argument("ints", nargs="*", type=int, help="operator arguments (i k, or t)")
    p_apply.add_argument("--n", type=_rank_type, required=True, help="rank")
    p_apply.add_argument("--format", choices=("text", "json"), default="text")
    p_apply.set_defaults(func=_cmd_apply)

    p_verify = sub.add_parser("verify", help="run a verification sweep")
    p_verify.add_argument("suite", choices=base_suite_names() + ("all",))
    p_verify.add_argument("--n", type=_rank_type, required=True, help="rank")
    p_verify.add_argument("--window", type=_window_type, default=(-2, 2), help="slot window a..b")
    p_verify.add_argument("--ht", type=_positive_type, default=4, help="height bound")
    p_verify.add_argument("--seed", type=_seed_type, default=0)
    p_verify.add_argument("--jobs", type=int, default=None, help="worker processes (env EXTCRYSTAL_JOBS)")
    p_verify.set_defaults(func=_cmd_verify)

    p_graph = sub.add_parser("graph", help="explore the reachable graph from a seed element")
    p_graph.add_argument("seed", help="seed element text; '' or '1' is the highest element")
    p_graph.add_argument("--n", type=_rank_type, required=True, help="rank")
    p_graph.add_argument("--window", type=_window_type, default=(-2, 2), help="slot window a..b")
    p_graph.add_argument("--ht", type=_positive_type, default=4, help="height bound")
    p_graph.add_argument("--format", choices=("dot", "json", "text"), default="dot")
    p_graph.add_argument("--out", help="output path (default: stdout)")
    p_graph.set_defaults(func=_cmd_graph)

    p_demo = sub.add_parser("demo-n3", help="replay the rank-3 worked example")
    p_demo.set_defaults(func=_cmd_demo_n3)

    return parser


# ----------------------------------------------------------------------


def _cmd_apply(args: argparse.Namespace) -> int:
    model = AffineModel(args.n)
    ext = model.ext
    op = args.op
    ints = args.ints

    def need(count: int) -> None:
        if len(ints) != count:
            raise ValueError(f"operator {op} takes {count} integer argument(s), got {len(ints)}")

    if op in ("F", "E", "Fstar", "Estar"):
        need(2)
        c = parse_ext_element(args.target, ext)
        i, k = ints
        fn = {
            "F": ext.lowering,
            "E": ext.raising,
            "Fstar": ext.star_lowering,
            "Estar": ext.star_raising,
        }[op]
        text = format_ext_element(fn(c, i, k))
    elif op in ("Fhl", "Ehl"):
        need(2)
        lam = parse_hl_weight(args.target)
        for p in lam.support():
            model.check_node(p)
        i, k = ints
        fn = model.lowering if op == "Fhl" else model.raising
        text = format_hl_weight(fn(lam, i, k))
    elif op == "shift":
        need(1)
        c = parse_ext_element(args.target, ext)
        text = format_ext_element(ext.shift(c, ints[0]))
    elif op == "starflip":
        need(0)
        c = parse_ext_element(args.target, ext)
        text = format_ext_element(ext.star_flip(c))
    elif op == "gamma":
        need(0)
        c = parse_ext_element(args.target, ext)
        text = format_hl_weight(model.to_weight(c))
    elif op == "gammainv":
        need(0)
        lam = parse_hl_weight(args.target)
        for p in lam.support():
            model.check_node(p)
        text = format_ext_element(model.to_extended(lam))
    else:  # star
        need(0)
        m = parse_multisegment(args.target)
        model.crystal.validate(m)
        text = format_multisegment(model.crystal.star(m))

    if args.format == "json":
        print(jsonlib.dumps({"result": text}))
    else:
        print(text)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = SweepConfig(
        n=args.n,
        window=args.window,
        max_ht=args.ht,
        seed=args.seed,
        jobs=_resolve_jobs(args.jobs),
    )
    names = base_suite_names() if args.suite == "all" else (args.suite,)
    failed = False
    for name in names:
        violations = run_suite(name, cfg)
        size = suite_size(name, cfg)
        if violations:
            failed = True
            print(f"{name}: FAIL ({len(violations)} violation(s) over {size} items)")
            print(f"  first counterexample: {violations[0]}")
        else:
            print(f"{name}: PASS ({size} items)")
    return 1 if failed else 0


def _cmd_graph(args: argparse.Namespace) -> int:
    model = AffineModel(args.n)
    seed = parse_ext_element(args.seed, model.ext)
    graph = model.ext.explore(seed, args.window, args.ht)
    if args.format == "dot":
        payload = graph.to_dot()
    elif args.format == "json":
        payload = graph.to_json() + "\n"
    else:
        lines = [f"nodes {len(graph.nodes)} edges {len(graph.edges)}"]
        for idx, c in enumerate(graph.nodes):
            lines.append(f"node {idx}: {format_ext_element(c)}")
        for src, dst, i, k in graph.edges:
            lines.append(f"edge {src} -> {dst} ({i},{k})")
        payload = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 0


# ----------------------------------------------------------------------
# the rank-3 worked example

_DEMO_WEIGHT = (
    "(3,-4),(1,-2),(3,-2),2*(2,-1),(2,1),(1,2),(2,3),2*(3,4),(2,5),(2,7)"
)

# (i, k), the frozen reduced table by position a_6..a_1, nodes removed/added
_DEMO_CASES = (
    ((1, 0), "++ . . . + .", HLNode(3, 4), None),
    ((1, -1), ". - ++ . . .", HLNode(2, -1), HLNode(1, -2)),
)


def _reduced_row(model: AffineModel, lam: HLWeight, i: int, k: int) -> str:
    """Surviving signs per scan position, top position first, '.' when empty."""
    survivors = Counter(t for _sign, t in reduce_signature(model.signature(lam, i, k)))
    sn = model.signature_nodes(i, k)
    cells = []
    for t in range(len(sn), 0, -1):
        count = survivors.get(t, 0)
        cells.append(sn.sign_at(t) * count if count else ".")
    return " ".join(cells)


def _q_label(p: HLNode) -> str:
    return f"({p.i},(-q)^{p.a})"


def _cmd_demo_n3(_args: argparse.Namespace) -> int:
    model = AffineModel(3)
    lam = parse_hl_weight(_DEMO_WEIGHT)
    print("rank-3 worked example")
    print(f"lambda = {format_hl_weight(lam)}")
    ok = True
    for (i, k), frozen_row, removed, added in _DEMO_CASES:
        sn = model.signature_nodes(i, k)
        print(f"\noperator ({i},{k})")
        print("  position  node          sign  count")
        for t in range(len(sn), 0, -1):
            p = sn.node_at(t)
            print(f"  a_{t}       {_q_label(p):<13} {sn.sign_at(t)}     {lam.coeff(p)}")
        row = _reduced_row(model, lam, i, k)
        print(f"  reduced a_6..a_1: {row}")
        expect = lam.remove_node(removed)
        if added is not None:
            expect = expect.add_node(added)
        got = model.lowering(lam, i, k)
        change = f"lambda - {removed}" + (f" + {added}" if added is not None else "")
        print(f"  lowering: {change}")
        print(f"  result: {format_hl_weight(got)}")
        case_ok = row == frozen_row and got == expect
        print(f"  check: {'PASS' if case_ok else 'FAIL'}")
        ok = ok and case_ok
    print(f"\noverall: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


# ----------------------------------------------------------------------


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    argv = _merge_window_values(list(argv))
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if not code:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main_exit() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    main_exit()
