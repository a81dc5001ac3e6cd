"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 malformed input, 3 when a hunt
reports a counterexample or theorem violation.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from . import reports
from .formats import FormatError, emit_graph, parse_graph, to_graph6
from .graph_core import GraphError, complement
from .hunt import CAMPAIGNS, EXHAUSTIVE, RANDOM, auto_signatures, certify, membership_to_dict, run_campaign
from .recognize import classify
from .reduction import build_reduction, verify_two_approx
from .transform import EnumerationBudget, check_two_clique_class, enumerate_class, sample_member

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_FOUND = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; we reserve 2 for malformed input
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _pair(text: str, allow_empty: bool = False) -> tuple[int, int]:
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"signature must look like m,n; got {text!r}") from None
    if len(parts) != 2:
        raise UsageError(f"signature must have two parts; got {text!r}")
    if allow_empty:
        if min(parts) < 1:
            raise UsageError(f"clique sizes must be positive; got {text!r}")
        return tuple(sorted(parts))
    try:
        return check_two_clique_class(parts)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _signatures(text: str, max_order: Optional[int]) -> list[tuple[int, int]]:
    if text == "auto":
        if max_order is None:
            raise UsageError("--sigs auto needs --max-order")
        return auto_signatures(max_order)
    return [_pair(chunk) for chunk in text.split(";") if chunk.strip()]


def _out(text: str):
    sys.stdout.write(text)


def cmd_recognize(args) -> int:
    g = parse_graph(_read(args.file), args.format)
    doc = {
        "schema_version": reports.SCHEMA_VERSION,
        "kind": "membership",
        "order": g.order,
        "membership": membership_to_dict(classify(g)),
    }
    _out(reports.dumps(doc))
    return EXIT_OK


def cmd_sample(args) -> int:
    g = sample_member(_pair(args.sig), args.steps, args.seed)
    if args.complement:
        g = complement(g)
    _out(emit_graph(g, args.to))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    sig = _pair(args.sig, allow_empty=True)
    budget = EnumerationBudget(args.max_classes, args.max_frontier, args.max_seconds)
    result = enumerate_class(sig, budget)
    members = result.members()
    if args.complement:
        members = [complement(g) for g in members]
    doc = {
        "schema_version": reports.SCHEMA_VERSION,
        "kind": "enumeration",
        "signature": list(sig),
        "classes": len(members),
        "partial": result.partial,
        "reason": result.reason,
        "graphs": [to_graph6(g) for g in members],
    }
    _out(reports.dumps(doc))
    return EXIT_OK


def cmd_certify(args) -> int:
    g = parse_graph(_read(args.file), args.format)
    _out(reports.dumps(certify(g).to_dict()))
    return EXIT_OK


def cmd_hunt(args) -> int:
    sigs = _signatures(args.sigs, args.max_order)
    report = run_campaign(args.campaign, sigs, args.mode, args.budget, args.seed, args.jobs,
                          args.max_seconds)
    _out(reports.dumps(report.to_dict()))
    return EXIT_FOUND if report.counterexamples else EXIT_OK


def cmd_reduce(args) -> int:
    g = parse_graph(_read(args.file), args.format)
    inst = build_reduction(g)
    rep = verify_two_approx(g)
    doc = {
        "schema_version": reports.SCHEMA_VERSION,
        "kind": "reduction",
        "source": to_graph6(g),
        "product": to_graph6(inst.product),
        "n": inst.n,
        "source_optimum": rep.source_optimum,
        "product_optimum": rep.product_optimum,
        "extracted": rep.extracted,
        "ratio": str(rep.ratio),
        "holds": rep.holds,
    }
    _out(reports.dumps(doc))
    return EXIT_OK


def cmd_convert(args) -> int:
    g = parse_graph(_read(args.file), getattr(args, "from"))
    _out(emit_graph(g, args.to, degrees=args.degrees))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="degseq", description="Graphs degree-equivalent to clique unions.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def with_input(sp):
        sp.add_argument("file", help="input graph file, or - for stdin")
        sp.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")

    sp = sub.add_parser("recognize", help="class membership of a graph")
    with_input(sp)
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("sample", help="random class member by a seeded 2-switch walk")
    sp.add_argument("--sig", required=True)
    sp.add_argument("--steps", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--complement", action="store_true", help="emit the complement-class graph")
    sp.add_argument("--to", choices=("graph6", "edgelist", "dot"), default="graph6")
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser("enumerate", help="all isomorphism classes of a two-clique class")
    sp.add_argument("--sig", required=True)
    sp.add_argument("--max-classes", type=int, default=1_000_000)
    sp.add_argument("--max-frontier", type=int, default=1_000_000)
    sp.add_argument("--max-seconds", type=float, default=3600.0)
    sp.add_argument("--complement", action="store_true", help="list the complement class instead")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("certify", help="full property report")
    with_input(sp)
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("hunt", help="search campaigns for the open questions")
    sp.add_argument("campaign", choices=CAMPAIGNS)
    sp.add_argument("--sigs", default="auto", help="'auto' or 'm,n;m,n;...'")
    sp.add_argument("--max-order", type=int)
    sp.add_argument("--mode", choices=(EXHAUSTIVE, RANDOM), default=EXHAUSTIVE)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--budget", type=int, help="classes (exhaustive) or draws (random) per cell")
    sp.add_argument("--max-seconds", type=float, default=3600.0, help="per-cell time limit")
    sp.add_argument("--jobs", type=int, default=int(os.environ.get("DEGSEQ_JOBS", "1") or 1))
    sp.set_defaults(func=cmd_hunt)

    sp = sub.add_parser("reduce", help="independent-set reduction and 2-approximation check")
    with_input(sp)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("convert", help="convert between graph formats")
    sp.add_argument("file")
    sp.add_argument("--from", choices=("auto", "graph6", "edgelist"), default="auto")
    sp.add_argument("--to", choices=("graph6", "edgelist", "dot"), default="graph6")
    sp.add_argument("--degrees", action="store_true", help="annotate DOT labels with degrees")
    sp.set_defaults(func=cmd_convert)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_help(sys.stderr)
            return EXIT_USAGE
        if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be positive")
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (FormatError, GraphError, OSError, UnicodeDecodeError) as exc:
        print(f"degseq: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"degseq: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
