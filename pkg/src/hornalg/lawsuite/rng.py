"""SplitMix64, the only source of randomness in the law suite."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, TypeVar

T = TypeVar("T")

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-ish integer in ``[0, n)`` by reduction modulo ``n``."""
        if n <= 0:
            raise ValueError("bound must be positive")
        return self.next() % n

    def bernoulli(self, p: Fraction) -> bool:
        # exact comparison next()/2^64 < p, no floating point involved
        p = Fraction(p)
        if not 0 <= p <= 1:
            raise ValueError("probability must lie in [0, 1]")
        return self.next() * p.denominator < p.numerator << 64

    def choice(self, items: Sequence[T]) -> T:
        return items[self.below(len(items))]

    def shuffled(self, items: Sequence[T]) -> list[T]:
        out = list(items)
        for i in range(len(out) - 1, 0, -1):
            j = self.below(i + 1)
            out[i], out[j] = out[j], out[i]
        return out


def stream(seed: int, n: int) -> list[int]:
    """The first ``n`` outputs of the generator started at ``seed``."""
    rng = SplitMix64(seed)
    return [rng.next() for _ in range(n)]
