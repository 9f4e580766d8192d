"""Deterministic 64-bit random bits, identical on every platform.

All randomized sampling in this package draws from splitmix64, chosen
because it is trivial to reimplement from its published constants and
therefore easy to audit: the same seed yields the same bit stream in any
language, on any machine.  The generator name is recorded in experiment
reports next to the seed.

Conventions (load-bearing for byte-identical reports):
  - words are consumed in call order from a single stream per generator;
  - bit draws consume whole words through an internal buffer, low bit first;
  - integers in [0, n) use rejection sampling on whole words, so they are
    exactly uniform.
"""

from __future__ import annotations

GENERATOR_NAME = "splitmix64"

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _finalize(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """splitmix64 stream; seed is reduced mod 2^64."""

    __slots__ = ("_state", "_buf", "_buf_len")

    def __init__(self, seed: int):
        self._state = seed & _MASK64
        self._buf = 0
        self._buf_len = 0

    def next_word(self) -> int:
        """Next 64-bit output word (does not touch the bit buffer)."""
        self._state = (self._state + _GAMMA) & _MASK64
        return _finalize(self._state)

    def next_bits(self, k: int) -> int:
        """Next k bits as an int, consumed low-bit-first from buffered words."""
        while self._buf_len < k:
            self._buf |= self.next_word() << self._buf_len
            self._buf_len += 64
        out = self._buf & ((1 << k) - 1)
        self._buf >>= k
        self._buf_len -= k
        return out

    def randbelow(self, n: int) -> int:
        """Exactly uniform integer in [0, n), via rejection on 64-bit words."""
        if n <= 0:
            raise ValueError("randbelow requires n >= 1")
        limit = _MASK64 + 1 - ((_MASK64 + 1) % n)
        while True:
            w = self.next_word()
            if w < limit:
                return w % n

    def sample_indices(self, n: int, m: int) -> tuple[int, ...]:
        """Uniform m-subset of range(n), returned sorted ascending."""
        if not 0 <= m <= n:
            raise ValueError(f"cannot sample {m} indices from range({n})")
        idx = list(range(n))
        for i in range(m):
            j = i + self.randbelow(n - i)
            idx[i], idx[j] = idx[j], idx[i]
        return tuple(sorted(idx[:m]))


def mix_seed(*parts: int) -> int:
    """Fold integers into one 64-bit seed (chained splitmix64 finalizer).

    Used to derive per-trial seeds as mix_seed(master, n, trial), so any
    subset of trials can be re-run independently.
    """
    h = _GAMMA
    for p in parts:
        h = _finalize(((h ^ (p & _MASK64)) + _GAMMA) & _MASK64)
    return h
