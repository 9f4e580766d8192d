#!/usr/bin/env python3
"""Width growth on random graphs, with the balanced-cut lower bound.

Rankwidth of a fair-coin random graph grows linearly in n.  Desk-scale n
cannot show an asymptotic, but the trend and the sandwich
lower bound <= rankwidth <= n-1 are visible per trial.  The union-bound
envelope 3^(3n) * 2^(-n^2) that controls the failure probability of the
lower-bound argument collapses extremely fast, which the last table shows.
"""

from widthlab import (
    ExperimentConfig,
    envelope_curve,
    render_summary,
    render_table,
    scaling_experiment,
)


def main():
    cfg = ExperimentConfig(
        name="scaling", n_values=(6, 8, 10), trials=5, master_seed=2024
    )
    report = scaling_experiment(cfg, jobs=2)
    print("per-trial records (rw / boolw / lb):")
    for rec in report.records:
        print(
            f"  n={rec['n']} trial={rec['trial']}: rw={rec['rw']} "
            f"boolw={rec['boolw']:.4f} lb={rec['lb']} rw/n={rec['rw_over_n']:.3f}"
        )
    print()
    print(render_summary(report), end="")

    print("\nunion-bound envelope (vacuous at small n, then collapses):")
    table = envelope_curve(range(3, 16))
    print(render_table(table, float_formats={"envelope": "{:.6e}"}), end="")


if __name__ == "__main__":
    main()
