"""Command-line front end: analyze / solve / bounds / construct / check /
scan / gen over edge-list files.

Exit codes: 0 success, 1 usage, 2 parse or validation error, 3 solver cap
exceeded, 4 claim violation found.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import (
    cactus_bounds,
    check_theorems,
    classify_graph,
    conjecture_scan,
    construct_generator,
    unicyclic_bounds,
)
from .generators import (
    GenConfig,
    named_family,
    random_cactus,
    random_general,
    random_tree,
    random_unicyclic,
)
from .graph import (
    EdgeListParseError,
    GraphError,
    format_edge_list,
    load_graph,
)
from .solver import TooLargeError, solve_report
from .structure import NotCactusError, structural_report

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_TOO_LARGE = 3
EXIT_CLAIM_VIOLATION = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cactusdim", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_command(name, help_text, cap=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", required=True, help="edge-list file")
        p.add_argument("--format", choices=("json", "text"), default="text")
        if cap:
            p.add_argument("--cap", type=int, default=20, help="exact-search size cap")
        return p

    add_graph_command("analyze", "structural report: cycles, threads, L, activity, domains")
    add_graph_command("solve", "exact dim and edim with witnesses", cap=True)
    add_graph_command("bounds", "class-appropriate lower/upper bounds")
    add_graph_command("construct", "constructive generator with verification flags")
    add_graph_command("check", "verdicts for every applicable bound claim", cap=True)

    scan = sub.add_parser("scan", help="sample graphs and record dim/edim gaps")
    scan.add_argument("--family", required=True,
                      choices=("tree", "unicyclic", "cactus", "general"))
    scan.add_argument("--n", type=int, required=True, help="maximum vertex count")
    scan.add_argument("--n-min", type=int, default=None)
    scan.add_argument("--cycles", type=int, default=0)
    scan.add_argument("--cycles-min", type=int, default=None)
    scan.add_argument("--trials", type=int, default=100)
    scan.add_argument("--seed", type=int, default=0)
    scan.add_argument("--cap", type=int, default=20)
    scan.add_argument("--format", choices=("csv", "json"), default="csv")

    gen = sub.add_parser("gen", help="emit a graph in the edge-list format")
    gen.add_argument("--family", required=True,
                     choices=("tree", "unicyclic", "cactus", "general", "path",
                              "cycle", "star", "spider", "tadpole", "bowtie",
                              "theta-free-cactus-chain"))
    gen.add_argument("--n", type=int, default=None)
    gen.add_argument("--cycles", type=int, default=2)
    gen.add_argument("--cycle-len", type=int, default=None)
    gen.add_argument("--tail", type=int, default=1)
    gen.add_argument("--legs", type=int, default=3)
    gen.add_argument("--leg-len", type=int, default=1)
    gen.add_argument("--leaves", type=int, default=3)
    gen.add_argument("--seed", type=int, default=0)
    return parser


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def _cmd_analyze(args) -> int:
    g = load_graph(args.input)
    _emit(structural_report(g), args.format)
    return EXIT_OK


def _cmd_solve(args) -> int:
    g = load_graph(args.input)
    _emit(solve_report(g, cap=args.cap), args.format)
    return EXIT_OK


def _cmd_bounds(args) -> int:
    g = load_graph(args.input)
    graph_class = classify_graph(g)
    if graph_class == "unicyclic":
        lower, upper = unicyclic_bounds(g)
    elif graph_class == "cactus":
        lower, upper = cactus_bounds(g)
    elif graph_class in ("tree", "path"):
        from .structure import decompose_threads

        L = decompose_threads(g).L
        lower = upper = L if graph_class == "tree" else (1 if g.n >= 2 else 0)
    else:
        raise NotCactusError("bound formulas apply to trees and cactus graphs only")
    _emit({"graph_class": graph_class, "lower": lower, "upper": upper}, args.format)
    return EXIT_OK


def _cmd_construct(args) -> int:
    g = load_graph(args.input)
    _emit(construct_generator(g).as_dict(), args.format)
    return EXIT_OK


def _cmd_check(args) -> int:
    g = load_graph(args.input)
    cert = check_theorems(g, cap=args.cap)
    _emit(cert.as_dict(), args.format)
    return EXIT_OK if cert.theorem_ok else EXIT_CLAIM_VIOLATION


def _cmd_scan(args) -> int:
    config = GenConfig(
        family=args.family,
        n=args.n,
        cycles=args.cycles,
        seed=args.seed,
        n_min=args.n_min,
        cycles_min=args.cycles_min,
    )
    report = conjecture_scan(config, trials=args.trials, cap=args.cap)
    if args.format == "csv":
        sys.stdout.write(report.to_csv())
    else:
        print(json.dumps(report.as_dict(), sort_keys=True))
    return EXIT_CLAIM_VIOLATION if report.violations else EXIT_OK


def _cmd_gen(args) -> int:
    family = args.family
    seed = args.seed
    if family == "tree":
        g = random_tree(args.n, seed)
    elif family == "unicyclic":
        g = random_unicyclic(args.n, args.cycle_len or 3, seed)
    elif family == "cactus":
        g = random_cactus(args.n, args.cycles, seed)
    elif family == "general":
        g = random_general(args.n, args.cycles, seed)
    elif family == "path":
        g = named_family("path", n=args.n)
    elif family == "cycle":
        g = named_family("cycle", g=args.n)
    elif family == "star":
        g = named_family("star", leaves=args.leaves)
    elif family == "spider":
        g = named_family("spider", legs=args.legs, leg_len=args.leg_len)
    elif family == "tadpole":
        g = named_family("tadpole", g=args.cycle_len or 3, tail=args.tail)
    elif family == "bowtie":
        g = named_family("bowtie")
    else:
        g = named_family(
            "theta-free-cactus-chain", cycles=args.cycles, cycle_len=args.cycle_len or 3
        )
    sys.stdout.write(format_edge_list(g))
    return EXIT_OK


_DISPATCH = {
    "analyze": _cmd_analyze,
    "solve": _cmd_solve,
    "bounds": _cmd_bounds,
    "construct": _cmd_construct,
    "check": _cmd_check,
    "scan": _cmd_scan,
    "gen": _cmd_gen,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _DISPATCH[args.command](args)
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (EdgeListParseError, GraphError, NotCactusError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
