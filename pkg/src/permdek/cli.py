"""Command-line front door.

Exit codes: 0 success, 1 domain failure (not stackable, contains the
pattern, shuffle not winnable, a verify check failed), 2 usage error.
Set PERMDEK_LOG=DEBUG|INFO|WARNING to control log verbosity.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import dek, explore, machines, paths, perms

log = logging.getLogger(__name__)

CONFIG_NAMES = {
    "stack": ("stack",),
    "queue": ("queue",),
    "two-stacks": ("stack", "stack"),
    "two-queues": ("queue", "queue"),
    "stack-queue": ("stack", "queue"),
}


def _perm_arg(text: str) -> perms.Perm:
    try:
        return perms.parse_permutation(text)
    except perms.PermutationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permdek",
        description="Stack/queue realizable permutations, their bijection, "
        "and the deque solitaire game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="pattern-avoidance verdicts for a permutation")
    p.add_argument("--perm", type=_perm_arg, required=True)
    p.add_argument("--pattern", choices=["312", "321"])

    p = sub.add_parser("map", help="map between 312-avoiders and 321-avoiders")
    p.add_argument("--perm", type=_perm_arg, required=True)
    p.add_argument("--inverse", action="store_true")

    for name in ("stackit", "queueit"):
        p = sub.add_parser(name, help=f"{name} projection of any permutation")
        p.add_argument("--perm", type=_perm_arg, required=True)

    p = sub.add_parser("path", help="height-profile lattice path of a realization")
    p.add_argument("--perm", type=_perm_arg, required=True)
    p.add_argument("--machine", choices=["stack", "queue", "set"], required=True)
    p.add_argument("--xfer", action="store_true", help="allow direct transfers (stack)")
    p.add_argument("--format", choices=["word", "ascii"], default="word")
    p.add_argument("--show-trace", action="store_true")

    p = sub.add_parser("count", help="obtainable-permutation counts up to n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--machine", choices=sorted(CONFIG_NAMES), required=True)
    p.add_argument("--no-xfer", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="exhaustive cross-check suite over S_n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("dek-solve", help="clairvoyant winnability of a shuffle")
    p.add_argument("--shuffle", type=_perm_arg, required=True)
    p.add_argument("--witness", action="store_true")

    p = sub.add_parser("dek-prob", help="exact win probability of the solitaire")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["clairvoyant", "policy"], default="clairvoyant")

    p = sub.add_parser("dek-serve", help="run the stateless JSON game service")
    p.add_argument("--port", type=int, required=True)
    p.add_argument("--bind", default="127.0.0.1")

    return parser


def _cmd_check(args) -> int:
    verdicts = {
        "312": perms.avoids_312(args.perm),
        "321": perms.avoids_321(args.perm),
    }
    if args.pattern:
        avoided = verdicts[args.pattern]
        print(("avoids " if avoided else "contains ") + args.pattern)
        return 0 if avoided else 1
    for pattern, avoided in verdicts.items():
        print(("avoids " if avoided else "contains ") + pattern)
    return 0


def _cmd_map(args) -> int:
    try:
        mapped = (
            paths.knuth_richards_inv(args.perm)
            if args.inverse
            else paths.knuth_richards(args.perm)
        )
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    print(perms.format_permutation(mapped))
    return 0


def _cmd_project(args, command: str) -> int:
    fn = paths.stackit if command == "stackit" else paths.queueit
    print(perms.format_permutation(fn(args.perm)))
    return 0


def _cmd_path(args) -> int:
    if args.machine == "stack":
        trace = machines.realize_with_stack(args.perm, allow_xfer=args.xfer)
        if trace is None:
            witness = machines.stack_block_witness(args.perm)
            print(f"not stackable: 312 witness {witness}", file=sys.stderr)
            return 1
    elif args.machine == "queue":
        trace = machines.realize_with_queue(args.perm)
        if trace is None:
            witness = machines.queue_block_witness(args.perm)
            print(f"not queueable: 321 witness {witness}", file=sys.stderr)
            return 1
    else:
        trace = machines.realize_with_set(args.perm)
    if args.show_trace:
        print(trace.render())
    path = machines.trace_height_profile(trace)
    print(paths.render_ascii(path) if args.format == "ascii" else path.word)
    return 0


def _cmd_count(args) -> int:
    if args.n < 0 or args.n > explore.MAX_COUNT_N:
        print(f"--n must be in 0..{explore.MAX_COUNT_N}", file=sys.stderr)
        return 2
    config = explore.MachineConfig(CONFIG_NAMES[args.machine], xfer=not args.no_xfer)
    rows = []
    for n in range(args.n + 1):
        table = explore.count_obtainable(config, n)
        rows.append(
            {
                "config": config.label(),
                "n": n,
                "count": table.count,
                "catalan": paths.catalan(n),
                "elapsed_ms": round(table.elapsed * 1000, 3),
            }
        )
    if args.json:
        print(json.dumps(rows))
    else:
        for row in rows:
            print(
                f"{row['config']}\t{row['n']}\t{row['count']}"
                f"\t{row['catalan']}\t{row['elapsed_ms']}"
            )
    return 0


def _cmd_verify(args) -> int:
    if args.n < 0 or args.n > explore.MAX_VERIFY_N:
        print(f"--n must be in 0..{explore.MAX_VERIFY_N}", file=sys.stderr)
        return 2
    report = explore.verify_bijection_suite(args.n)
    print(report.render())
    return 0 if report.all_ok else 1


def _cmd_dek_solve(args) -> int:
    if len(args.shuffle) > dek.MAX_SOLVE_N:
        print(f"shuffle length must be at most {dek.MAX_SOLVE_N}", file=sys.stderr)
        return 2
    winnable, witness = dek.clairvoyant_winnable(args.shuffle)
    print("winnable" if winnable else "not winnable")
    if winnable and args.witness:
        assert witness is not None
        for move in witness:
            print(move)
    return 0 if winnable else 1


def _cmd_dek_prob(args) -> int:
    try:
        if args.mode == "clairvoyant":
            value = dek.win_probability_clairvoyant(args.n)
        else:
            value = dek.optimal_policy_value(args.n)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    print(f"{value.numerator}/{value.denominator}")
    return 0


def _cmd_dek_serve(args) -> int:
    from .service import serve_http

    serve_http(args.port, args.bind)
    return 0


def run_cli(argv: list[str] | None = None) -> int:
    level = os.environ.get("PERMDEK_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "map":
            return _cmd_map(args)
        if args.command in ("stackit", "queueit"):
            return _cmd_project(args, args.command)
        if args.command == "path":
            return _cmd_path(args)
        if args.command == "count":
            return _cmd_count(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "dek-solve":
            return _cmd_dek_solve(args)
        if args.command == "dek-prob":
            return _cmd_dek_prob(args)
        if args.command == "dek-serve":
            return _cmd_dek_serve(args)
    except (perms.PermutationError, dek.DekError) as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command}")


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
