"""Dense GF(2) matrices with bit-packed rows, plus rank machinery.

Each row is stored as one Python int (bit j = column j), so a row XOR is a
single word-packed operation and elimination never allocates per-entry.
Degenerate shapes (0 x k, k x 0, 0 x 0) are legal everywhere and have rank 0,
which spares the callers from special-casing empty cuts.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import CapExceeded
from .rng import SplitMix64

# Default ceiling on C(rows, m) * C(cols, k) pairs scanned by the exhaustive
# submatrix minimizer.  Explicit configuration, never silently truncated.
DEFAULT_PAIR_CAP = 10**9

# Exhaustive rank-distribution enumeration walks all 2**(m*n) matrices.
ORACLE_BIT_CAP = 20


class BitMatrix:
    """Immutable dense matrix over GF(2).

    Rows are packed ints; bits at or beyond `cols` are guaranteed zero.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, data: Iterable[int] = ()):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        packed = tuple(data)
        if len(packed) != rows:
            raise ValueError(f"expected {rows} packed rows, got {len(packed)}")
        mask = (1 << cols) - 1
        for i, r in enumerate(packed):
            if r < 0 or r & ~mask:
                raise ValueError(f"row {i} has bits outside {cols} columns")
        self.rows = rows
        self.cols = cols
        self._data = packed

    @classmethod
    def from_rows(cls, entries: Sequence[Sequence[int]], cols: int | None = None) -> "BitMatrix":
        """Build from nested 0/1 lists; `cols` required only when empty."""
        if cols is None:
            if not entries:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(entries[0])
        data = []
        for i, row in enumerate(entries):
            if len(row) != cols:
                raise ValueError(f"row {i} has length {len(row)}, expected {cols}")
            word = 0
            for j, e in enumerate(row):
                if e not in (0, 1):
                    raise ValueError(f"entry ({i},{j}) is {e!r}, not a bit")
                word |= e << j
            data.append(word)
        return cls(len(entries), cols, data)

    def get(self, i: int, j: int) -> int:
        if not 0 <= i < self.rows:
            raise IndexError(f"row index {i} out of range for {self.rows} rows")
        if not 0 <= j < self.cols:
            raise IndexError(f"column index {j} out of range for {self.cols} columns")
        return (self._data[i] >> j) & 1

    def row_bits(self, i: int) -> int:
        """Packed bits of row i."""
        return self._data[i]

    @property
    def row_words(self) -> tuple[int, ...]:
        return self._data

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self._data]

    def transpose(self) -> "BitMatrix":
        cols = [0] * self.cols
        for i, r in enumerate(self._data):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BitMatrix(self.cols, self.rows, cols)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"


def _rank_of_words(words: Iterable[int]) -> int:
    """GF(2) rank of packed rows.

    Incremental elimination: each basis row is keyed by its lowest nonzero
    column (deterministic pivot choice); a new row is XOR-reduced against
    matching pivots until it is zero or contributes a fresh pivot.
    """
    pivots: dict[int, int] = {}
    rank = 0
    for v in words:
        while v:
            low = v & -v
            p = pivots.get(low)
            if p is None:
                pivots[low] = v
                rank += 1
                break
            v ^= p
    return rank


def rank(matrix: BitMatrix) -> int:
    """GF(2) rank; the input is never modified."""
    return _rank_of_words(matrix.row_words)


def submatrix(matrix: BitMatrix, rowset: Iterable[int], colset: Iterable[int]) -> BitMatrix:
    """Submatrix on (possibly discontiguous) index sets, in ascending order."""
    rsel = sorted(set(rowset))
    csel = sorted(set(colset))
    for r in rsel:
        if not 0 <= r < matrix.rows:
            raise IndexError(f"row index {r} out of range for {matrix.rows} rows")
    for c in csel:
        if not 0 <= c < matrix.cols:
            raise IndexError(f"column index {c} out of range for {matrix.cols} columns")
    data = []
    for r in rsel:
        word = matrix.row_bits(r)
        out = 0
        for jj, c in enumerate(csel):
            out |= ((word >> c) & 1) << jj
        data.append(out)
    return BitMatrix(len(rsel), len(csel), data)


def sample_matrix(m: int, n: int, seed: int) -> BitMatrix:
    """Random m x n matrix, each entry independently 1 with probability 1/2.

    Entries are drawn row-major from the seeded splitmix64 bit stream, so the
    result is bit-identical for a given (m, n, seed) on every platform.
    """
    if m < 0 or n < 0:
        raise ValueError("matrix dimensions must be nonnegative")
    rng = SplitMix64(seed)
    data = [rng.next_bits(n) if n else 0 for _ in range(m)]
    return BitMatrix(m, n, data)


def rank_distribution_oracle(m: int, n: int) -> list[Fraction]:
    """Exact rank distribution of the m x n model, by full enumeration.

    Entry r is (#matrices of rank r) / 2**(m*n), as an exact Fraction; the
    entries sum to exactly 1.  Requires m*n <= ORACLE_BIT_CAP.
    """
    if m < 0 or n < 0:
        raise ValueError("matrix dimensions must be nonnegative")
    bits = m * n
    if bits > ORACLE_BIT_CAP:
        raise CapExceeded(
            f"enumerating 2^{bits} matrices exceeds the m*n <= {ORACLE_BIT_CAP} cap"
        )
    counts = [0] * (min(m, n) + 1)
    row_mask = (1 << n) - 1
    for code in range(1 << bits):
        words = [(code >> (i * n)) & row_mask for i in range(m)]
        counts[_rank_of_words(words)] += 1
    total = 1 << bits
    return [Fraction(c, total) for c in counts]


def min_submatrix_rank_exhaustive(
    matrix: BitMatrix,
    m: int,
    k: int,
    pair_cap: int = DEFAULT_PAIR_CAP,
) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Exact minimum GF(2) rank over all m x k submatrices, with a witness.

    Scans C(rows, m) * C(cols, k) submatrices; the witness is the first pair
    achieving the minimum in lexicographic (rowset, colset) order.  Raises
    CapExceeded when the scan would exceed `pair_cap`.
    """
    if not 0 <= m <= matrix.rows:
        raise ValueError(f"need 0 <= m <= {matrix.rows}, got {m}")
    if not 0 <= k <= matrix.cols:
        raise ValueError(f"need 0 <= k <= {matrix.cols}, got {k}")
    pairs = math.comb(matrix.rows, m) * math.comb(matrix.cols, k)
    if pairs > pair_cap:
        raise CapExceeded(
            f"{pairs} submatrices exceed the work cap {pair_cap}; "
            "use min_submatrix_rank_sampled instead"
        )
    col_masks = []
    for cset in combinations(range(matrix.cols), k):
        mask = 0
        for c in cset:
            mask |= 1 << c
        col_masks.append(mask)
    col_sets = list(combinations(range(matrix.cols), k))

    data = matrix.row_words
    best = min(m, k) + 1
    best_rows: tuple[int, ...] = ()
    best_cols: tuple[int, ...] = ()
    for rset in combinations(range(matrix.rows), m):
        rows = [data[r] for r in rset]
        for ci, cmask in enumerate(col_masks):
            # inline rank with early abort once it cannot beat `best`
            pivots: dict[int, int] = {}
            count = 0
            for v in rows:
                v &= cmask
                while v:
                    low = v & -v
                    p = pivots.get(low)
                    if p is None:
                        pivots[low] = v
                        count += 1
                        break
                    v ^= p
                if count >= best:
                    break
            if count < best:
                best = count
                best_rows = rset
                best_cols = col_sets[ci]
                if best == 0:
                    return 0, best_rows, best_cols
    return best, best_rows, best_cols


def min_submatrix_rank_sampled(
    matrix: BitMatrix,
    m: int,
    k: int,
    trials: int,
    seed: int,
) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Minimum rank over `trials` uniformly sampled m x k submatrices.

    The result is an upper bound on the true minimum; callers that put it in
    a report must flag it as non-certified.
    """
    if not 0 <= m <= matrix.rows:
        raise ValueError(f"need 0 <= m <= {matrix.rows}, got {m}")
    if not 0 <= k <= matrix.cols:
        raise ValueError(f"need 0 <= k <= {matrix.cols}, got {k}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = SplitMix64(seed)
    data = matrix.row_words
    best = min(m, k) + 1
    best_rows: tuple[int, ...] = ()
    best_cols: tuple[int, ...] = ()
    for _ in range(trials):
        rset = rng.sample_indices(matrix.rows, m)
        cset = rng.sample_indices(matrix.cols, k)
        cmask = 0
        for c in cset:
            cmask |= 1 << c
        r = _rank_of_words(data[i] & cmask for i in rset)
        if r < best:
            best = r
            best_rows = rset
            best_cols = cset
    return best, best_rows, best_cols


def parse_matrix_text(text: str) -> BitMatrix:
    """Parse the test fixture format: first line "m n", then m rows of 0/1."""
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty matrix text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"expected 'm n' on the first line, got {lines[0]!r}")
    m, n = int(head[0]), int(head[1])
    body = lines[1 : 1 + m]
    if len(body) != m:
        raise ValueError(f"expected {m} rows, found {len(body)}")
    data = []
    for i, line in enumerate(body):
        if len(line) != n or set(line) - {"0", "1"}:
            raise ValueError(f"row {i} is not {n} characters of 0/1: {line!r}")
        word = 0
        for j, ch in enumerate(line):
            if ch == "1":
                word |= 1 << j
        data.append(word)
    return BitMatrix(m, n, data)


def format_matrix_text(matrix: BitMatrix) -> str:
    lines = [f"{matrix.rows} {matrix.cols}"]
    for i in range(matrix.rows):
        word = matrix.row_bits(i)
        lines.append("".join("1" if (word >> j) & 1 else "0" for j in range(matrix.cols)))
    return "\n".join(lines) + "\n"
