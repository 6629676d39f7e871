"""Deterministic 64-bit random number generator (SplitMix64).

All randomized components of the package draw from this generator so that
results are reproducible bit-for-bit across platforms and processes.  The
recurrence is the standard SplitMix64:

    state  <- (state + 0x9E3779B97F4A7C15) mod 2^64
    z      <- state
    z      <- (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9   mod 2^64
    z      <- (z XOR (z >> 27)) * 0x94D049BB133111EB   mod 2^64
    output <- z XOR (z >> 31)

Sub-seeds for trial i of a sweep are the i-th output of the stream seeded
with the master seed (see `derive_seed`), so trials are independent of how
many were run before them.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Seedable generator yielding 64-bit unsigned integers."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return _mix(self._state)

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection sampling."""
        if n <= 0:
            raise ValueError("randbelow requires n > 0")
        # largest multiple of n that fits in 64 bits; rejects the biased tail
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def randrange(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] inclusive."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.randbelow(hi - lo + 1)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (2.0**-53)

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, population: list, k: int) -> list:
        """k distinct items, chosen without replacement."""
        if k > len(population):
            raise ValueError("sample larger than population")
        pool = list(population)
        out = []
        for _ in range(k):
            out.append(pool.pop(self.randbelow(len(pool))))
        return out


def derive_seed(master_seed: int, index: int) -> int:
    """Seed for trial `index` of a sweep: the index-th SplitMix64 output."""
    if index < 0:
        raise ValueError("index must be non-negative")
    return _mix((master_seed + (index + 1) * _GAMMA) & _MASK)
