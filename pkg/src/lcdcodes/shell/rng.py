"""Seeded random codes.

The generator is SplitMix64 (64-bit state, Steele/Lea/Flood 2014) so that a
seed reproduces the same file byte for byte on every platform. Uniform draws
below ``q`` use rejection on the top of the 2**64 range to avoid modulo bias.
"""

from __future__ import annotations

from ..codecore import EUCLIDEAN, LinearCode
from ..galois import FieldSpec
from ..matfq import MatrixFq, rank

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def choice(self, seq):
        return seq[self.below(len(seq))]


def random_matrix(field: FieldSpec, rows: int, cols: int, rng: SplitMix64) -> MatrixFq:
    """Entries drawn row-major."""
    return MatrixFq(field, [[rng.below(field.q) for _ in range(cols)] for _ in range(rows)])


def random_code(field: FieldSpec, n: int, k: int, rng: SplitMix64 | int,
                variant: str = EUCLIDEAN) -> LinearCode:
    """Uniform k x n generator, redrawn until it has rank k."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if isinstance(rng, int):
        rng = SplitMix64(rng)
    while True:
        G = random_matrix(field, k, n, rng)
        if rank(G) == k:
            return LinearCode(field, G, variant)
