"""Small deterministic generator for reproducible verification runs.

A 64-bit multiplicative congruential generator: state <- state * A mod
2**64 with A = 6364136223846793005 (Knuth's MMIX multiplier, = 5 mod 8).
The state is forced odd at seeding, which keeps the recurrence on the
maximal-period orbit of odd residues.  Low bits of such a generator are
weak, so every draw comes from the high bits, and integer ranges are
produced by rejection so that identical seeds give identical streams on
any platform.

This is deliberately not ``random.Random``: verification transcripts must
be byte-identical across Python versions, so the generator is pinned down
to the arithmetic.
"""

from __future__ import annotations

_MULTIPLIER = 6364136223846793005
_MASK64 = (1 << 64) - 1


class Stream:
    """Deterministic 64-bit stream seeded from a nonnegative integer."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        if seed < 0:
            raise ValueError("seed must be nonnegative")
        self.state = ((seed << 1) | 1) & _MASK64

    def next_word(self) -> int:
        """Advance once and return the full 64-bit state."""
        self.state = (self.state * _MULTIPLIER) & _MASK64
        return self.state

    def bits(self, k: int) -> int:
        """Top k bits of the next word, 1 <= k <= 64."""
        if not 1 <= k <= 64:
            raise ValueError("k must be in 1..64")
        return self.next_word() >> (64 - k)

    def int_between(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], bias-free via rejection."""
        if lo > hi:
            raise ValueError(f"empty range [{lo}, {hi}]")
        span = hi - lo + 1
        k = max(1, span.bit_length())
        while True:
            v = self.bits(k)
            if v < span:
                return lo + v

    def real(self) -> float:
        """Uniform float in [-1.0, 1.0) from 53 high bits."""
        return self.bits(53) / float(1 << 52) - 1.0

    def coeffs_int(self, bound: int = 1024) -> list[float]:
        """32 integer-valued coefficients, each uniform in [-bound, bound]."""
        return [float(self.int_between(-bound, bound)) for _ in range(32)]

    def coeffs_real(self) -> list[float]:
        """32 coefficients, each uniform in [-1, 1)."""
        return [self.real() for _ in range(32)]
