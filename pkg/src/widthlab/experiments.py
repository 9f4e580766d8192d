"""Seeded randomized experiments with machine-readable, byte-stable reports.

Every trial seed derives as mix_seed(master, n, trial), so any subset of
trials can be recomputed independently and a report is reproducible from its
own config echo.  Reports never present a sampled (non-exhaustive) minimum as
certified: sampled results carry certified=false.

Trial workers are top-level functions and configs are plain frozen
dataclasses, so trials can run in a process pool; records are assembled in
(n, trial) order, which makes the output independent of scheduling.
"""

from __future__ import annotations

import json
import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ._version import __version__
from .boolspace import _cut_bool_count_bits, bell, galois_number, log2_int
from .errors import CapExceeded
from .gf2 import (
    DEFAULT_PAIR_CAP,
    min_submatrix_rank_exhaustive,
    min_submatrix_rank_sampled,
    sample_matrix,
)
from .graphs import _cut_rank_bits, sample_gnp_half
from .rng import GENERATOR_NAME, mix_seed
from .widths import (
    CUT_BOOL_FUNCTION,
    CUT_RANK_FUNCTION,
    balanced_cut_lower_bound,
    exact_f_width,
    tree_cuts,
)


@dataclass(frozen=True)
class ExperimentConfig:
    name: str
    n_values: tuple[int, ...]
    trials: int
    master_seed: int
    mode: str = "exhaustive"  # "exhaustive" | "sampled"
    work_cap: int = DEFAULT_PAIR_CAP
    width_cap: int = 16
    sample_trials: int = 2000


@dataclass(frozen=True)
class ExperimentReport:
    config: ExperimentConfig
    generator: str
    version: str
    columns: tuple[str, ...]
    records: tuple[dict, ...] = field(default_factory=tuple)
    summaries: tuple[dict, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class Table:
    """Plain column/row table for the non-randomized tabulations."""

    columns: tuple[str, ...]
    rows: tuple[tuple, ...]


def _validate_config(cfg: ExperimentConfig, min_n: int) -> None:
    if not cfg.n_values:
        raise ValueError("config has an empty n list")
    if cfg.trials < 1:
        raise ValueError("config must request at least one trial")
    if cfg.mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown mode {cfg.mode!r}")
    for n in cfg.n_values:
        if n < min_n:
            raise ValueError(f"n = {n} below the minimum {min_n} for {cfg.name}")


def _call_trial(args):
    worker, cfg, n, t = args
    return worker(cfg, n, t)


def _run_trials(
    cfg: ExperimentConfig,
    worker: Callable[[ExperimentConfig, int, int], dict],
    jobs: int,
) -> list[dict]:
    tasks = [(worker, cfg, n, t) for n in cfg.n_values for t in range(cfg.trials)]
    if jobs > 1 and len(tasks) > 1:
        try:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                records = list(pool.map(_call_trial, tasks, chunksize=1))
        except (OSError, PermissionError):
            records = [_call_trial(t) for t in tasks]
    else:
        records = [_call_trial(t) for t in tasks]
    records.sort(key=lambda r: (r["n"], r["trial"]))
    return records


# --- minimum submatrix rank under the square random-matrix model ---

LEMMA1_COLUMNS = ("n", "trial", "seed", "mu", "rowset", "colset", "certified")


def _lemma1_trial(cfg: ExperimentConfig, n: int, t: int) -> dict:
    seed = mix_seed(cfg.master_seed, n, t)
    matrix = sample_matrix(n, n, seed)
    m = n // 3
    k = -(-2 * n // 3)
    pairs = math.comb(n, m) * math.comb(n, k)
    if cfg.mode == "exhaustive" and pairs <= cfg.work_cap:
        mu, rset, cset = min_submatrix_rank_exhaustive(matrix, m, k, cfg.work_cap)
        certified = True
    else:
        mu, rset, cset = min_submatrix_rank_sampled(
            matrix, m, k, cfg.sample_trials, mix_seed(seed, 1)
        )
        certified = False
    return {
        "n": n,
        "trial": t,
        "seed": seed,
        "mu": mu,
        "rowset": list(rset),
        "colset": list(cset),
        "certified": certified,
    }


def lemma1_experiment(cfg: ExperimentConfig, jobs: int = 1) -> ExperimentReport:
    """Distribution of the minimum floor(n/3) x ceil(2n/3) submatrix rank.

    Samples square random matrices and minimizes rank over all (or, above the
    work cap, sampled) submatrices of the stated shape; summarizes the
    minimum's distribution and how often it falls at or below floor(n/6).
    """
    _validate_config(cfg, min_n=3)
    records = _run_trials(cfg, _lemma1_trial, jobs)
    summaries = []
    for n in cfg.n_values:
        mus = [r["mu"] for r in records if r["n"] == n]
        certified = all(r["certified"] for r in records if r["n"] == n)
        summaries.append(
            {
                "n": n,
                "trials": len(mus),
                "min_mu": min(mus),
                "median_mu": statistics.median(mus),
                "mean_mu": statistics.fmean(mus),
                "max_mu": max(mus),
                "frac_mu_le_n6": sum(1 for v in mus if v <= n // 6) / len(mus),
                "certified_all": certified,
            }
        )
    return ExperimentReport(
        config=cfg,
        generator=GENERATOR_NAME,
        version=__version__,
        columns=LEMMA1_COLUMNS,
        records=tuple(records),
        summaries=tuple(summaries),
    )


# --- widths of random graphs ---

SCALING_COLUMNS = ("n", "trial", "seed", "rw", "boolw", "lb", "rw_over_n")


def _scaling_trial(cfg: ExperimentConfig, n: int, t: int) -> dict:
    seed = mix_seed(cfg.master_seed, n, t)
    graph = sample_gnp_half(n, seed)
    rw = int(exact_f_width(graph, CUT_RANK_FUNCTION, cfg.width_cap).value)
    boolw = exact_f_width(graph, CUT_BOOL_FUNCTION, cfg.width_cap).value
    lb_value, _ = balanced_cut_lower_bound(graph, CUT_RANK_FUNCTION)
    lb = int(lb_value)
    if lb > rw:
        raise AssertionError(f"balanced lower bound {lb} above exact rankwidth {rw}")
    return {
        "n": n,
        "trial": t,
        "seed": seed,
        "rw": rw,
        "boolw": boolw,
        "lb": lb,
        "rw_over_n": rw / n,
    }


def scaling_experiment(cfg: ExperimentConfig, jobs: int = 1) -> ExperimentReport:
    """Exact rankwidth/booleanwidth of random graphs as n grows.

    Per trial records rankwidth, booleanwidth, the balanced-cut lower bound
    under cut-rank (asserted <= rankwidth), and rw/n.
    """
    _validate_config(cfg, min_n=3)
    for n in cfg.n_values:
        if n > cfg.width_cap:
            raise CapExceeded(f"n = {n} above the exact width cap {cfg.width_cap}")
    records = _run_trials(cfg, _scaling_trial, jobs)
    summaries = []
    for n in cfg.n_values:
        rows = [r for r in records if r["n"] == n]
        rws = [r["rw"] for r in rows]
        summaries.append(
            {
                "n": n,
                "trials": len(rows),
                "min_rw": min(rws),
                "median_rw": statistics.median(rws),
                "mean_rw": statistics.fmean(rws),
                "max_rw": max(rws),
                "mean_boolw": statistics.fmean(r["boolw"] for r in rows),
                "max_lb": max(r["lb"] for r in rows),
                "min_rw_over_n": min(r["rw_over_n"] for r in rows),
            }
        )
    return ExperimentReport(
        config=cfg,
        generator=GENERATOR_NAME,
        version=__version__,
        columns=SCALING_COLUMNS,
        records=tuple(records),
        summaries=tuple(summaries),
    )


# --- booleanwidth against the subspace-count bound ---

BOOLW_RW_COLUMNS = (
    "n",
    "trial",
    "seed",
    "rw",
    "boolw",
    "log2_galois_rw",
    "cut_violations",
    "graph_ok",
)


def _boolw_rw_trial(cfg: ExperimentConfig, n: int, t: int) -> dict:
    seed = mix_seed(cfg.master_seed, n, t)
    graph = sample_gnp_half(n, seed)
    rw_res = exact_f_width(graph, CUT_RANK_FUNCTION, cfg.width_cap)
    bw_res = exact_f_width(graph, CUT_BOOL_FUNCTION, cfg.width_cap)
    rw = int(rw_res.value)
    log2_g = log2_int(galois_number(rw))
    violations = 0
    for tree in (rw_res.witness_tree, bw_res.witness_tree):
        for cut in tree_cuts(tree):
            count = _cut_bool_count_bits(graph, cut.bits)
            r = _cut_rank_bits(graph, cut.bits)
            if count > galois_number(r):
                violations += 1
    graph_ok = bw_res.value <= log2_g + 1e-12
    return {
        "n": n,
        "trial": t,
        "seed": seed,
        "rw": rw,
        "boolw": bw_res.value,
        "log2_galois_rw": log2_g,
        "cut_violations": violations,
        "graph_ok": graph_ok,
    }


def boolw_vs_rw_experiment(cfg: ExperimentConfig, jobs: int = 1) -> ExperimentReport:
    """Audit of the per-cut subspace bound linking boolean counts to rank.

    For every cut X of both optimal witness trees, checks that the number of
    distinct neighborhood unions is at most the number of subspaces of a
    cut_rank(X)-dimensional GF(2) space, and per graph that booleanwidth is
    at most log2 of the Galois number of the rankwidth.
    """
    _validate_config(cfg, min_n=1)
    for n in cfg.n_values:
        if n > cfg.width_cap:
            raise CapExceeded(f"n = {n} above the exact width cap {cfg.width_cap}")
    records = _run_trials(cfg, _boolw_rw_trial, jobs)
    summaries = []
    for n in cfg.n_values:
        rows = [r for r in records if r["n"] == n]
        summaries.append(
            {
                "n": n,
                "trials": len(rows),
                "max_rw": max(r["rw"] for r in rows),
                "max_boolw": max(r["boolw"] for r in rows),
                "total_cut_violations": sum(r["cut_violations"] for r in rows),
                "all_graphs_ok": all(r["graph_ok"] for r in rows),
            }
        )
    return ExperimentReport(
        config=cfg,
        generator=GENERATOR_NAME,
        version=__version__,
        columns=BOOLW_RW_COLUMNS,
        records=tuple(records),
        summaries=tuple(summaries),
    )


# --- deterministic tabulations ---


def envelope_curve(n_values) -> Table:
    """Union-bound envelope 3^(3n) * 2^(-n^2), exactly and in log space.

    The log2 column is the closed form 3n*log2(3) - n^2; the value column is
    the exact rational rounded to the nearest float (0.0 once it underflows).
    """
    rows = []
    for n in n_values:
        if n < 0:
            raise ValueError("n must be nonnegative")
        log2_env = 3 * n * math.log2(3) - n * n
        value = float(Fraction(3 ** (3 * n), 2 ** (n * n)))
        rows.append((n, log2_env, value))
    return Table(columns=("n", "log2_envelope", "envelope"), rows=tuple(rows))


def bell_asymptotic_check(n_max: int) -> Table:
    """Tabulate log2 of the Bell numbers against their n*log2(n) envelope.

    Asserts log2 B_n <= n*log2(n) on 3..n_max and reports the margin of the
    sharper n*(log2 n - log2 log2 (n-1)) form without asserting any constant.
    """
    if not 3 <= n_max <= 500:
        raise ValueError("n_max must be between 3 and 500")
    rows = []
    for n in range(3, n_max + 1):
        log2_bell = log2_int(bell(n))
        n_log2_n = n * math.log2(n)
        refined = n * (math.log2(n) - math.log2(math.log2(n - 1)))
        margin = log2_bell / n - math.log2(n) + math.log2(math.log2(n - 1))
        if log2_bell > n_log2_n:
            raise AssertionError(f"log2 B_{n} = {log2_bell} exceeds n*log2(n) = {n_log2_n}")
        rows.append((n, log2_bell, n_log2_n, refined, margin))
    return Table(
        columns=("n", "log2_bell", "n_log2_n", "refined_bound", "margin"),
        rows=tuple(rows),
    )


# --- serialization ---


def _format_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _config_lines(cfg: ExperimentConfig) -> list[str]:
    return [
        f"# experiment={cfg.name}",
        f"# generator={GENERATOR_NAME}",
        f"# version={__version__}",
        f"# master_seed={cfg.master_seed}",
        "# n_values=" + " ".join(str(n) for n in cfg.n_values),
        f"# trials={cfg.trials}",
        f"# mode={cfg.mode}",
    ]


def _config_dict(cfg: ExperimentConfig) -> dict:
    return {
        "name": cfg.name,
        "n_values": list(cfg.n_values),
        "trials": cfg.trials,
        "master_seed": cfg.master_seed,
        "mode": cfg.mode,
        "work_cap": cfg.work_cap,
        "width_cap": cfg.width_cap,
        "sample_trials": cfg.sample_trials,
    }


def write_report(report: ExperimentReport, fmt: str, path) -> None:
    """Write a report as CSV or JSON lines; identical inputs, identical bytes.

    CSV: '#' config preamble, header row, one row per trial (summaries live
    in the JSON form and on stdout).  JSONL: one object per trial, then a
    final object carrying config, generator, version and summaries.
    """
    if fmt == "csv":
        text = _report_csv(report)
    elif fmt == "jsonl":
        text = _report_jsonl(report)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc


def _report_csv(report: ExperimentReport) -> str:
    lines = _config_lines(report.config)
    lines.append(",".join(report.columns))
    for rec in report.records:
        lines.append(",".join(_format_cell(rec[c]) for c in report.columns))
    return "\n".join(lines) + "\n"


def _report_jsonl(report: ExperimentReport) -> str:
    lines = [json.dumps(rec, separators=(",", ":")) for rec in report.records]
    tail = {
        "config": _config_dict(report.config),
        "generator": report.generator,
        "version": report.version,
        "summaries": list(report.summaries),
    }
    lines.append(json.dumps(tail, separators=(",", ":")))
    return "\n".join(lines) + "\n"


def render_summary(report: ExperimentReport) -> str:
    """Fixed-precision human summary block (stdout companion to the files)."""
    lines = [
        f"experiment {report.config.name}: seed={report.config.master_seed} "
        f"trials={report.config.trials} mode={report.config.mode} "
        f"generator={report.generator}"
    ]
    for summary in report.summaries:
        parts = []
        for key, value in summary.items():
            if isinstance(value, bool):
                parts.append(f"{key}={'true' if value else 'false'}")
            elif isinstance(value, float):
                parts.append(f"{key}={value:.6f}")
            else:
                parts.append(f"{key}={value}")
        lines.append("  " + " ".join(parts))
    return "\n".join(lines) + "\n"


def render_table(table: Table, float_formats: dict[str, str] | None = None) -> str:
    """Deterministic text for a Table.

    Floats print with 6 fixed decimals unless float_formats overrides the
    format per column (the envelope column uses scientific notation).
    """
    fmts = float_formats or {}
    lines = [" ".join(table.columns)]
    for row in table.rows:
        cells = []
        for col, value in zip(table.columns, row):
            if isinstance(value, float):
                cells.append(fmts.get(col, "{:.6f}").format(value))
            else:
                cells.append(str(value))
        lines.append(" ".join(cells))
    return "\n".join(lines) + "\n"


def write_table(table: Table, fmt: str, path) -> None:
    """Write a Table as CSV (full-precision cells) or JSON lines."""
    if fmt == "csv":
        lines = [",".join(table.columns)]
        for row in table.rows:
            lines.append(",".join(_format_cell(v) for v in row))
        text = "\n".join(lines) + "\n"
    elif fmt == "jsonl":
        text = "".join(
            json.dumps(dict(zip(table.columns, row)), separators=(",", ":")) + "\n"
            for row in table.rows
        )
    else:
        raise ValueError(f"unknown table format {fmt!r}")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
