"""Command-line front end.

Subcommands: gen, width, lb, exp, oracle, check.  Output on stdout is
deterministic for identical arguments and inputs; diagnostics go to stderr
only.  Integer widths print bare; real-valued widths print with 6 decimals.
WIDTHLAB_SEED serves as the master seed when --seed is not given.
"""

from __future__ import annotations

import argparse
import os
import sys

from ._version import __version__
from .boolspace import bell, galois_number
from .errors import WidthlabError
from .gf2 import rank_distribution_oracle
from .graphs import Graph, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, _sample_gnp_from
from .rng import SplitMix64
from .experiments import (
    ExperimentConfig,
    bell_asymptotic_check,
    boolw_vs_rw_experiment,
    envelope_curve,
    lemma1_experiment,
    render_summary,
    render_table,
    scaling_experiment,
    write_report,
    write_table,
)
from .widths import (
    CUT_BOOL_FUNCTION,
    CUT_RANK_FUNCTION,
    balanced_cut_lower_bound,
    emit_tree,
    exact_f_width,
    parse_tree,
    tree_width_under,
)

_MEASURES = {"rank": CUT_RANK_FUNCTION, "bool": CUT_BOOL_FUNCTION}


def _format_value(measure: str, value: float) -> str:
    if measure == "rank":
        return str(int(round(value)))
    return f"{value:.6f}"


def _resolve_seed(args, parser: argparse.ArgumentParser) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("WIDTHLAB_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            parser.error(f"WIDTHLAB_SEED={env!r} is not an integer")
    parser.error("a seed is required: pass --seed or set WIDTHLAB_SEED")
    raise AssertionError("unreachable")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graphs(path: str, fmt: str) -> list[Graph]:
    text = _read_text(path)
    if fmt == "g6":
        return [parse_graph6(line) for line in text.splitlines() if line.strip()]
    blocks = [b for b in text.split("\n\n") if b.strip()]
    return [parse_edge_list(b) for b in blocks]


def _parse_n_list(spec: str) -> tuple[int, ...]:
    """Parse '6,9,12' or '3..12' (inclusive), or a mix of both."""
    out: list[int] = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            continue
        if ".." in token:
            lo, hi = token.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(token))
    if not out:
        raise ValueError(f"empty n list {spec!r}")
    return tuple(out)


def _cmd_gen(args, parser) -> int:
    seed = _resolve_seed(args, parser)
    if args.n < 0:
        parser.error("--n must be nonnegative")
    rng = SplitMix64(seed)
    chunks = []
    for _ in range(args.count):
        graph = _sample_gnp_from(rng, args.n)
        if args.format == "g6":
            chunks.append(emit_graph6(graph) + "\n")
        else:
            chunks.append(emit_edge_list(graph) + "\n")
    sys.stdout.write("".join(chunks).rstrip("\n") + "\n")
    return 0


def _cmd_width(args, parser) -> int:
    f = _MEASURES[args.measure]
    failed = False
    for idx, graph in enumerate(_load_graphs(args.input, args.input_format)):
        try:
            result = exact_f_width(graph, f, args.cap)
        except WidthlabError as exc:
            print(f"{idx} error: {exc}", file=sys.stderr)
            failed = True
            continue
        sys.stdout.write(f"{idx} {_format_value(args.measure, result.value)}\n")
        if args.witness:
            sys.stdout.write(emit_tree(result.witness_tree))
    return 2 if failed else 0


def _cmd_lb(args, parser) -> int:
    f = _MEASURES[args.measure]
    failed = False
    for idx, graph in enumerate(_load_graphs(args.input, args.input_format)):
        try:
            value, cut = balanced_cut_lower_bound(graph, f, args.cap)
        except (WidthlabError, ValueError) as exc:
            print(f"{idx} error: {exc}", file=sys.stderr)
            failed = True
            continue
        members = " ".join(str(v) for v in cut.members)
        sys.stdout.write(f"{idx} {_format_value(args.measure, value)} {members}\n")
    return 2 if failed else 0


def _cmd_check(args, parser) -> int:
    graphs = _load_graphs(args.input, args.input_format)
    if not graphs:
        parser.error("no graph in input")
    tree = parse_tree(_read_text(args.tree))
    result = tree_width_under(graphs[0], tree, _MEASURES[args.measure])
    sys.stdout.write(f"{_format_value(args.measure, result.value)}\n")
    return 0


_EXPERIMENTS = {
    "lemma1": lemma1_experiment,
    "scaling": scaling_experiment,
    "boolw-rw": boolw_vs_rw_experiment,
}


def _cmd_exp(args, parser) -> int:
    n_values = _parse_n_list(args.n_list)
    if args.experiment == "envelope":
        table = envelope_curve(n_values)
        sys.stdout.write(
            render_table(table, float_formats={"envelope": "{:.6e}"})
        )
        if args.out:
            write_table(table, args.format, args.out)
        return 0
    if args.experiment == "bell":
        table = bell_asymptotic_check(max(n_values))
        sys.stdout.write(render_table(table))
        if args.out:
            write_table(table, args.format, args.out)
        return 0

    seed = _resolve_seed(args, parser)
    cfg = ExperimentConfig(
        name=args.experiment,
        n_values=n_values,
        trials=args.trials,
        master_seed=seed,
        mode=args.mode,
        width_cap=args.width_cap,
        work_cap=args.work_cap,
    )
    report = _EXPERIMENTS[args.experiment](cfg, jobs=args.jobs)
    out = args.out or f"{args.experiment}-{seed}.{args.format}"
    write_report(report, args.format, out)
    sys.stdout.write(render_summary(report))
    return 0


def _cmd_oracle(args, parser) -> int:
    if args.oracle == "rankdist":
        dist = rank_distribution_oracle(args.m, args.n)
        total = 1 << (args.m * args.n)
        for r, frac in enumerate(dist):
            count = frac.numerator * (total // frac.denominator)
            sys.stdout.write(f"{r} {count}/{total}\n")
        return 0
    if args.oracle == "bell":
        sys.stdout.write(f"{bell(args.n)}\n")
        return 0
    sys.stdout.write(f"{galois_number(args.r)}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="widthlab",
        description="Exact graph width measures and seeded randomized experiments.",
    )
    parser.add_argument("--version", action="version", version=f"widthlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="sample random graphs (each edge fair-coin)")
    p_gen.add_argument("--n", type=int, required=True, help="vertex count")
    p_gen.add_argument("--seed", type=int, help="master seed (or WIDTHLAB_SEED)")
    p_gen.add_argument("--count", type=int, default=1, help="number of graphs")
    p_gen.add_argument("--format", choices=("g6", "edges"), default="g6")

    p_width = sub.add_parser("width", help="exact width per input graph")
    p_width.add_argument("--measure", choices=("rank", "bool"), default="rank")
    p_width.add_argument("--input", required=True, help="path or - for stdin")
    p_width.add_argument("--input-format", choices=("g6", "edges"), default="g6")
    p_width.add_argument("--witness", action="store_true", help="print the optimal tree")
    p_width.add_argument("--cap", type=int, default=16, help="exact engine vertex cap")

    p_lb = sub.add_parser("lb", help="balanced-cut lower bound per input graph")
    p_lb.add_argument("--measure", choices=("rank", "bool"), default="rank")
    p_lb.add_argument("--input", required=True)
    p_lb.add_argument("--input-format", choices=("g6", "edges"), default="g6")
    p_lb.add_argument("--cap", type=int, default=22, help="balanced enumeration cap")

    p_check = sub.add_parser("check", help="re-evaluate a serialized tree on a graph")
    p_check.add_argument("--measure", choices=("rank", "bool"), default="rank")
    p_check.add_argument("--input", required=True)
    p_check.add_argument("--input-format", choices=("g6", "edges"), default="g6")
    p_check.add_argument("--tree", required=True, help="path to a serialized tree")

    p_exp = sub.add_parser("exp", help="run a seeded experiment, write a report")
    p_exp.add_argument(
        "experiment", choices=("lemma1", "scaling", "boolw-rw", "bell", "envelope")
    )
    p_exp.add_argument("--seed", type=int, help="master seed (or WIDTHLAB_SEED)")
    p_exp.add_argument("--n-list", required=True, help="e.g. 6,9,12 or 3..12")
    p_exp.add_argument("--trials", type=int, default=10)
    p_exp.add_argument("--out", help="report path (default <experiment>-<seed>.<ext>)")
    p_exp.add_argument("--format", choices=("csv", "jsonl"), default="jsonl")
    p_exp.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p_exp.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p_exp.add_argument("--width-cap", type=int, default=16)
    p_exp.add_argument("--work-cap", type=int, default=10**9)

    p_oracle = sub.add_parser("oracle", help="exact counting oracles")
    oracle_sub = p_oracle.add_subparsers(dest="oracle", required=True)
    p_rd = oracle_sub.add_parser("rankdist", help="exact rank distribution of m x n")
    p_rd.add_argument("--m", type=int, required=True)
    p_rd.add_argument("--n", type=int, required=True)
    p_bell = oracle_sub.add_parser("bell", help="Bell number")
    p_bell.add_argument("--n", type=int, required=True)
    p_gal = oracle_sub.add_parser("galois", help="Galois number (subspace count)")
    p_gal.add_argument("--r", type=int, required=True)

    return parser


_HANDLERS = {
    "gen": _cmd_gen,
    "width": _cmd_width,
    "lb": _cmd_lb,
    "check": _cmd_check,
    "exp": _cmd_exp,
    "oracle": _cmd_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args, parser)
    except WidthlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 1


if __name__ == "__main__":
    sys.exit(main())
