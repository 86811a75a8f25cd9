"""SplitMix64: 64-bit state, fixed constants, reproducible across platforms."""

from fractions import Fraction
from math import lcm

MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def randbelow(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` by rejection (no modulo bias)."""
        if n <= 0:
            raise ValueError("n must be positive")
        if n > 1 << 64:
            raise ValueError("n exceeds 2**64")
        limit = ((1 << 64) // n) * n
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n


class Sampler:
    """Exact sampling from a finite distribution with rational probabilities."""

    def __init__(self, probs):
        probs = [Fraction(p) for p in probs]
        self.denom = lcm(*(p.denominator for p in probs))
        self.cum = []
        acc = 0
        for p in probs:
            acc += p.numerator * (self.denom // p.denominator)
            self.cum.append(acc)
        if acc != self.denom:
            raise ValueError("probabilities must sum to 1")

    def draw(self, rng: SplitMix64) -> int:
        r = rng.randbelow(self.denom)
        for k, c in enumerate(self.cum):
            if r < c:
                return k
        raise AssertionError("unreachable")
