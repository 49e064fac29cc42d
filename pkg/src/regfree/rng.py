"""Deterministic 64-bit RNG used by every randomized component.

splitmix64 with rejection sampling for uniform ranges and a fixed-point
comparison for Bernoulli draws.  The point is bit-exact reproducibility of
experiments from a seed alone, independent of platform or library version.
"""

from __future__ import annotations

from fractions import Fraction

_MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self, m: int) -> int:
        """Uniform integer in [0, m) by rejection: values >= floor(2^64/m)*m
        are redrawn, then reduced mod m.  Unbiased."""
        if m <= 0:
            raise ValueError("range must be positive")
        limit = ((1 << 64) // m) * m
        while True:
            z = self.next_u64()
            if z < limit:
                return z % m

    def bernoulli(self, p: Fraction) -> bool:
        """One draw per call; True with probability floor(p*2^64)/2^64.

        The bias vs. the exact rational p is at most 2^-64.
        """
        if not (0 <= p <= 1):
            raise ValueError("probability must be in [0, 1]")
        cutoff = (p.numerator << 64) // p.denominator
        return self.next_u64() < cutoff
