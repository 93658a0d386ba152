"""Command-line front end.

Exit codes: 0 success, 1 a verification claim failed, 2 usage or parse
error, 3 a size budget was exceeded.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

from .bases import minimum_base
from .graphs import DEFAULT_VERTEX_BUDGET, automorphism_group, parse_graph_text, standard_corpus
from .groups import base_size_report, parse_group
from .perm import DEFAULT_ELEMENT_BUDGET, BudgetExceeded, ParseError, orbits
from .verify import SuiteConfig, format_report, report_json, run_paper_suite, suite_failed

EXIT_OK, EXIT_CLAIM_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    element_budget: int = DEFAULT_ELEMENT_BUDGET
    max_points: int = 40
    graph_vertex_budget: int = DEFAULT_VERTEX_BUDGET
    output_path: Path | None = None
    quiet: bool = False

    def __post_init__(self):
        for name in ("element_budget", "max_points", "graph_vertex_budget"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")


def _fmt_set(s) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def _emit(lines: list[str], cfg: RunConfig, out: TextIO) -> None:
    shown = lines[:1] if cfg.quiet else lines
    out.write("\n".join(shown) + "\n")
    if cfg.output_path is not None:
        cfg.output_path.write_text("\n".join(lines) + "\n")


def cmd_base_size(perm_file: Path, cfg: RunConfig, out: TextIO = sys.stdout) -> int:
    from .perm import parse_perm_text

    g = parse_perm_text(Path(perm_file).read_text())
    base = minimum_base(g, cfg.element_budget)
    lines = [str(len(base.points)),
             "base: " + " ".join(map(str, base.points)),
             "chain: " + " ".join(map(str, base.witness_chain))]
    _emit(lines, cfg, out)
    return EXIT_OK


def cmd_determining_number(graph_file: Path, cfg: RunConfig, out: TextIO = sys.stdout) -> int:
    graph = parse_graph_text(Path(graph_file).read_text())
    if graph.vertex_count == 0:
        _emit(["0", "|Aut|: 1", "orbit sizes: ", "base: "], cfg, out)
        return EXIT_OK
    aut = automorphism_group(graph, cfg.graph_vertex_budget, cfg.element_budget)
    base = minimum_base(aut, cfg.element_budget)
    sizes = sorted(Counter(len(o) for o in orbits(aut)).elements())
    lines = [str(len(base.points)),
             f"|Aut|: {aut.order()}",
             "orbit sizes: " + " ".join(map(str, sizes)),
             "base: " + " ".join(map(str, base.points))]
    _emit(lines, cfg, out)
    return EXIT_OK


def cmd_bss(group: str, cfg: RunConfig, out: TextIO = sys.stdout) -> int:
    spec = parse_group(group)
    rep = base_size_report(spec, cfg.max_points, cfg.element_budget)
    lines = [_fmt_set(rep.achieved),
             f"group: {spec} order {spec.order}",
             f"max points: {cfg.max_points}",
             f"actions checked: {rep.actions_checked}",
             f"upper bound: {rep.upper_bound}",
             f"certified complete: {'yes' if rep.certified else 'no'}"]
    for b, (d, base) in rep.witnesses.items():
        lines.append(f"witness b={b}: {d.label(spec.order)} base "
                     + " ".join(map(str, base.points)))
    _emit(lines, cfg, out)
    return EXIT_OK


def cmd_dss_evidence(group: str, cfg: RunConfig, out: TextIO = sys.stdout) -> int:
    spec = parse_group(group)
    corpus = standard_corpus(spec, cfg.graph_vertex_budget, cfg.element_budget)
    lines = [_fmt_set(corpus.determining_numbers()),
             f"group: {spec} order {spec.order}",
             f"graphs: {len(corpus.entries)} (evidence only; not all graphs)"]
    for e in corpus.entries:
        lines.append(f"graph d={e.determining_number} n={e.graph.vertex_count} {e.label}")
    for reason in corpus.dropped:
        lines.append(f"dropped {reason}")
    _emit(lines, cfg, out)
    return EXIT_OK


def cmd_verify(suite: str, cfg: RunConfig, out: TextIO = sys.stdout) -> int:
    if suite not in ("paper", "quick"):
        raise ValueError(f"unknown suite {suite!r}")
    results = run_paper_suite(SuiteConfig(element_budget=cfg.element_budget,
                                          vertex_budget=cfg.graph_vertex_budget,
                                          quick=suite == "quick"))
    text = format_report(results)
    if cfg.quiet:
        failed = [r.claim_id for r in results if r.status == "FAIL"]
        out.write(f"{len(results)} claims, {len(failed)} failed\n")
    else:
        out.write(text)
    if cfg.output_path is not None:
        cfg.output_path.write_text(report_json(results))
    return EXIT_CLAIM_FAILED if suite_failed(results) else EXIT_OK


def _add_common(p: argparse.ArgumentParser, defaults: bool) -> None:
    # flags are accepted before or after the subcommand; only the top level sets defaults
    def d(v):
        return v if defaults else argparse.SUPPRESS

    p.add_argument("--max-points", type=int, default=d(40),
                   help="largest action degree enumerated for base size sets (default 40)")
    p.add_argument("--element-budget", type=int, default=d(DEFAULT_ELEMENT_BUDGET),
                   help="largest group order handled exactly (default 1000000)")
    p.add_argument("--vertex-budget", type=int, default=d(DEFAULT_VERTEX_BUDGET),
                   help="largest graph handled (default 64)")
    p.add_argument("--out", type=Path, default=d(None),
                   help="also write the output here (verify writes a JSON mirror)")
    p.add_argument("--quiet", action="store_true", default=d(False),
                   help="print only the headline result")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, defaults=False)

    parser = argparse.ArgumentParser(prog="basesize",
                                     description="Base sizes, base size sets and determining numbers.")
    _add_common(parser, defaults=True)
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("base-size", parents=[common], help="minimum base of a permutation group file")
    p.add_argument("perm_file", type=Path)
    p = sub.add_parser("determining-number", parents=[common], help="determining number of a graph file")
    p.add_argument("graph_file", type=Path)
    p = sub.add_parser("bss", parents=[common], help="base size set B_N(G) of Z:... or D:n")
    p.add_argument("group")
    p = sub.add_parser("dss-evidence", parents=[common],
                       help="determining numbers over the standard graph corpus")
    p.add_argument("group")
    p = sub.add_parser("verify", parents=[common], help="run the claim suite")
    p.add_argument("suite", help="'paper' or 'quick'")
    return parser


def main(argv: list[str] | None = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(args.element_budget, args.max_points, args.vertex_budget, args.out, args.quiet)
    except ValueError as exc:
        parser.print_usage(err)
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    try:
        if args.command == "base-size":
            return cmd_base_size(args.perm_file, cfg, out)
        if args.command == "determining-number":
            return cmd_determining_number(args.graph_file, cfg, out)
        if args.command == "bss":
            return cmd_bss(args.group, cfg, out)
        if args.command == "dss-evidence":
            return cmd_dss_evidence(args.group, cfg, out)
        return cmd_verify(args.suite, cfg, out)
    except BudgetExceeded as exc:
        err.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (ParseError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        if args.command == "verify":
            parser.print_usage(err)
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
