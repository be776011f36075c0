"""Seeded random streams for splitting and stochastic drift transforms.

Every stochastic operation in driftbench draws from one generator:

- Bit generator: PCG64 (``numpy.random.PCG64``), seeded with the 64-bit seed
  through numpy's ``SeedSequence``. Only the raw 64-bit output
  (``random_raw``) is consumed, so results do not depend on the platform or on
  numpy's higher-level sampling routines.
- Uniform double in [0, 1): ``(raw >> 11) * 2**-53``.
- Index in [0, n): ``raw % n`` (Fisher-Yates shuffle, bias below n / 2**64).
- Standard normal: Box-Muller, ``sqrt(-2 ln u1) * cos(2 pi u2)`` with
  ``u1 = ((raw_a >> 11) + 1) * 2**-53`` and ``u2`` a uniform from ``raw_b``.
- Per-image seeds: the first 8 bytes (little-endian) of
  ``blake2b(f"{seed}/{stem}/{index}", digest_size=8)``.
"""

import hashlib
from typing import Sequence, TypeVar

import numpy as np

MASK64 = (1 << 64) - 1
_INV_2_53 = 1.0 / (1 << 53)

T = TypeVar("T")


def derive_seed(seed: int, stem: str, index: int) -> int:
    """Mix a global seed with an image stem and a pipeline position."""
    digest = hashlib.blake2b(f"{seed & MASK64}/{stem}/{index}".encode("utf-8"), digest_size=8)
    return int.from_bytes(digest.digest(), "little")


class SeededStream:
    """Deterministic draw source over PCG64's raw output."""

    def __init__(self, seed: int) -> None:
        self.seed = seed & MASK64
        self._bitgen = np.random.PCG64(self.seed)

    def raw(self, n: int) -> np.ndarray:
        if n <= 0:
            return np.empty(0, dtype=np.uint64)
        return np.asarray(self._bitgen.random_raw(n), dtype=np.uint64)

    def uniform(self, n: int) -> np.ndarray:
        return (self.raw(n) >> np.uint64(11)).astype(np.float64) * _INV_2_53

    def normal(self, n: int) -> np.ndarray:
        a = self.raw(n)
        b = self.raw(n)
        u1 = ((a >> np.uint64(11)).astype(np.float64) + 1.0) * _INV_2_53
        u2 = (b >> np.uint64(11)).astype(np.float64) * _INV_2_53
        return np.sqrt(-2.0 * np.log(u1)) * np.cos(2.0 * np.pi * u2)

    def shuffle(self, items: Sequence[T]) -> list[T]:
        """Fisher-Yates shuffle returning a new list."""
        out = list(items)
        n = len(out)
        if n < 2:
            return out
        draws = self.raw(n - 1)
        for k, i in enumerate(range(n - 1, 0, -1)):
            j = int(draws[k]) % (i + 1)
            out[i], out[j] = out[j], out[i]
        return out
