"""Self-contained 64-bit xorshift-star generator for reproducible suites.

The generator is fully specified so runs are reproducible anywhere:
state' = xorshift(state) with shifts 12, 25, 27 (left shift masked to 64
bits), output = (state' * 0x2545F4914F6CDD1D) mod 2^64.  A zero seed is
replaced by 0x9E3779B97F4A7C15 since the all-zero state is a fixed point.
Bounded draws use plain modulo reduction; the tiny bias is irrelevant for
test-instance generation and keeps the stream trivially portable.
"""

from __future__ import annotations

from fractions import Fraction

_MASK = (1 << 64) - 1
MULTIPLIER = 0x2545F4914F6CDD1D
ZERO_SEED_SUBSTITUTE = 0x9E3779B97F4A7C15


class XorShift64Star:
    """Deterministic pseudo-random stream; not for cryptographic use."""

    def __init__(self, seed: int) -> None:
        self.state = (seed & _MASK) or ZERO_SEED_SUBSTITUTE

    def next_u64(self) -> int:
        s = self.state
        s ^= s >> 12
        s = (s ^ (s << 25)) & _MASK
        s ^= s >> 27
        self.state = s
        return (s * MULTIPLIER) & _MASK

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n)."""
        if n < 1:
            raise ValueError("bound must be positive")
        return self.next_u64() % n

    def int_between(self, lo: int, hi: int) -> int:
        """Integer in [lo, hi], both ends inclusive."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.below(hi - lo + 1)

    def fraction(self, max_abs_num: int, max_den: int) -> Fraction:
        """Fraction with numerator in [-max_abs_num, max_abs_num], denominator in [1, max_den]."""
        num = self.int_between(-max_abs_num, max_abs_num)
        den = self.int_between(1, max_den)
        return Fraction(num, den)
