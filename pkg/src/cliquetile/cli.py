"""Command line entry point: ``cliquetile gen | tile | repair | papartitions | verify | wreath``.

Exit codes: 0 success or pass, 1 verification failure, 2 construction
failure, 3 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import formats, oracle
from .graph import InstanceInfeasible, Params, random_dense_instance
from .papartition import ConstructionFailed, SizeOverflow, construct_papartitions
from .repair import NoValidSwap, bag_free_decomposition
from .tiling import RepairFailed, almost_ell_decomposition
from .wreath import DEFAULT_BUDGET, search_wreaths, append_ledger, verify_wreath_decomposition

EXIT_OK, EXIT_VERIFY, EXIT_CONSTRUCT, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _is_json(text: str) -> bool:
    return text.lstrip().startswith("{")


def _load_instance(path: str):
    text = _read(path)
    if _is_json(text):
        return formats.instance_from_json(json.loads(text))
    return formats.parse_instance(text)


def _load_decomposition(path: str):
    text = _read(path)
    if _is_json(text):
        return formats.decomposition_from_json(json.loads(text))
    return formats.parse_decomposition(text)


def _emit_decomposition(d, args) -> None:
    if args.format == "json":
        _write(formats.dumps(formats.decomposition_to_json(d)), args.out)
    else:
        _write(formats.format_decomposition(d), args.out)


def cmd_gen(args) -> int:
    p = Params(args.ell, args.alpha)
    inst = random_dense_instance(args.m, p, args.red_max, args.seed)
    if args.format == "json":
        _write(formats.dumps(formats.instance_to_json(inst, p)), args.out)
    else:
        _write(formats.format_instance(inst, p), args.out)
    return EXIT_OK


def cmd_tile(args) -> int:
    inst, p = _load_instance(args.instance)
    try:
        d = almost_ell_decomposition(inst.blue, p)
    except RepairFailed as exc:
        if not args.fallback:
            print(f"construction failed: {exc}", file=sys.stderr)
            return EXIT_CONSTRUCT
        d = oracle.exhaustive_tiling(inst.blue, p.ell)
        if d is None:
            print(f"construction failed: {exc}; exhaustive search found no tiling", file=sys.stderr)
            return EXIT_CONSTRUCT
    _emit_decomposition(d, args)
    return EXIT_OK


def cmd_repair(args) -> int:
    inst, p = _load_instance(args.instance)
    try:
        d, trace = bag_free_decomposition(inst, p)
    except (RepairFailed, NoValidSwap) as exc:
        if not args.fallback:
            print(f"construction failed: {exc}", file=sys.stderr)
            return EXIT_CONSTRUCT
        d, trace = oracle.exhaustive_bag_free_tiling(inst, p.ell), None
        if d is None:
            print(f"construction failed: {exc}; exhaustive search found no bag-free tiling", file=sys.stderr)
            return EXIT_CONSTRUCT
    if args.trace and trace is not None:
        _write(formats.format_trace(trace), args.trace)
    _emit_decomposition(d, args)
    return EXIT_OK


def cmd_papartitions(args) -> int:
    try:
        fam = construct_papartitions(args.n, args.k, args.ell, args.alpha)
    except (ConstructionFailed, SizeOverflow) as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCT
    if args.format == "json":
        _write(formats.dumps(formats.papartitions_to_json(fam)), args.out)
    else:
        _write(formats.format_papartitions(fam), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = []
    if args.decomposition:
        if not args.instance:
            raise UsageError("verify --decomposition needs --instance")
        inst, p = _load_instance(args.instance)
        d = _load_decomposition(args.decomposition)
        rep = oracle.verify_decomposition(inst.blue, p.ell, d)
        reports.append(("decomposition", rep))
        reports.append(("bag-free", oracle.verify_bag_free(inst, d)))
    if args.papartitions:
        if None in (args.n, args.k, args.ell):
            raise UsageError("verify --papartitions needs --n, --k and --ell")
        text = _read(args.papartitions)
        fam = (formats.papartitions_from_json(json.loads(text)) if _is_json(text)
               else formats.parse_papartitions(text))
        reports.append(("papartitions", oracle.verify_papartition_family(args.n, args.k, args.ell, fam)))
    if args.wreaths:
        text = _read(args.wreaths)
        n, k, ws = (formats.wreaths_from_json(json.loads(text)) if _is_json(text)
                    else formats.parse_wreaths(text))
        reports.append(("wreaths", verify_wreath_decomposition(n, k, ws)))
    if not reports:
        raise UsageError("verify needs --decomposition, --papartitions or --wreaths")
    lines = []
    for name, rep in reports:
        body = rep.lines()
        lines.append(f"{name}: {body[0]}")
        lines.extend(body[1:])
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK if all(rep.ok for _, rep in reports) else EXIT_VERIFY


def cmd_wreath(args) -> int:
    outcome = search_wreaths(args.n, args.k, args.budget, args.seed)
    if args.ledger:
        append_ledger(args.ledger, outcome.ledger_line(args.n, args.k))
    if outcome.status != "found":
        print(f"n={args.n} k={args.k}: {outcome.status} after {outcome.steps} steps", file=sys.stderr)
        return EXIT_CONSTRUCT
    if args.format == "json":
        _write(formats.dumps(formats.wreaths_to_json(args.n, args.k, outcome.wreaths)), args.out)
    else:
        _write(formats.format_wreaths(args.n, args.k, outcome.wreaths), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cliquetile", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp):
        sp.add_argument("--out", help="output file (default: stdout)")
        sp.add_argument("--format", choices=["text", "json"], default="text")

    sp = sub.add_parser("gen", help="generate a seeded random two-coloured instance")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--red-max", type=int, default=0)
    sp.add_argument("--seed", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("tile", help="almost-ell-decomposition of the blue graph")
    sp.add_argument("--instance", required=True)
    sp.add_argument("--fallback", action="store_true", help="try exhaustive search if repair fails")
    common(sp)
    sp.set_defaults(func=cmd_tile)

    sp = sub.add_parser("repair", help="bag-free decomposition under the red edges")
    sp.add_argument("--instance", required=True)
    sp.add_argument("--trace", help="write the insertion trace here")
    sp.add_argument("--fallback", action="store_true", help="try exhaustive search if repair fails")
    common(sp)
    sp.set_defaults(func=cmd_repair)

    sp = sub.add_parser("papartitions", help="pairwise not-too-close (k, ell)-papartitions of [n]")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--alpha", type=float)
    common(sp)
    sp.set_defaults(func=cmd_papartitions)

    sp = sub.add_parser("verify", help="check an artifact with the brute-force oracle")
    sp.add_argument("--instance")
    sp.add_argument("--decomposition")
    sp.add_argument("--papartitions")
    sp.add_argument("--wreaths")
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--ell", type=int)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("wreath", help="search for a wreath decomposition of all k-subsets of [n]")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--ledger", help="append 'n k status steps seed' to this file")
    common(sp)
    sp.set_defaults(func=cmd_wreath)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage().rstrip())
        return args.func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (formats.FormatError, ValueError, OSError) as exc:
        if isinstance(exc, InstanceInfeasible):
            print(f"construction failed: {exc}", file=sys.stderr)
            return EXIT_CONSTRUCT
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
