"""Shared oracles and helpers.

The oracles here are deliberately written against different math than the
code they check: rank via row-space cardinality instead of elimination,
partition counts via restricted-growth strings instead of the Bell triangle,
subspace counts via explicit span enumeration instead of the product formula.
"""

from __future__ import annotations

import io
import sys
from contextlib import redirect_stderr, redirect_stdout
from itertools import combinations

from widthlab import BitMatrix
from widthlab.cli import main as cli_main


def rank_by_row_space(matrix: BitMatrix) -> int:
    """GF(2) rank as log2 of the number of distinct XOR row combinations."""
    space = {0}
    for w in matrix.row_words:
        space |= {s ^ w for s in space}
    size = len(space)
    assert size & (size - 1) == 0
    return size.bit_length() - 1


def union_count_by_subsets(words: list[int]) -> int:
    """Distinct OR combinations by explicit 2^m subset enumeration."""
    seen = set()
    m = len(words)
    for pick in range(1 << m):
        acc = 0
        for i in range(m):
            if (pick >> i) & 1:
                acc |= words[i]
        seen.add(acc)
    return len(seen)


def count_set_partitions(n: int) -> int:
    """Partitions of an n-set counted by enumerating restricted growth strings."""
    if n == 0:
        return 1

    def rec(i: int, max_used: int) -> int:
        if i == n:
            return 1
        total = 0
        for block in range(max_used + 2):
            total += rec(i + 1, max(max_used, block))
        return total

    return rec(1, 0)


def enumerate_subspaces(r: int) -> set[frozenset[int]]:
    """All subspaces of GF(2)^r, as frozensets of member vectors."""
    vectors = list(range(1, 1 << r))
    spaces = {frozenset({0})}
    for size in range(1, r + 1):
        for basis in combinations(vectors, size):
            span = {0}
            for v in basis:
                span |= {s ^ v for s in span}
            spaces.add(frozenset(span))
    return spaces


def run_cli(argv: list[str]) -> tuple[int, str, str]:
    """Invoke the CLI in-process, capturing stdout/stderr."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        try:
            code = cli_main(argv)
        except SystemExit as exc:  # argparse errors
            code = exc.code if isinstance(exc.code, int) else 1
    return code, out.getvalue(), err.getvalue()
