"""Monte Carlo estimates of coin-event frequencies, checked against exact standard parts.

Sampling contract: sample ``i`` belongs to block ``i // BLOCK_SIZE``; block
``b`` draws its coin values from ``PCG64(SeedSequence(seed, spawn_key=(b,)))``.
The hit count therefore depends only on ``(seed, samples, horizon)`` and
not on how blocks are distributed over workers.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

from .errors import ModelMismatchError, PreconditionError
from .events import CoinEvent
from .nafield import standard_part
from .numerosity import coin_context, probability

BLOCK_SIZE = 8192
DEFAULT_HORIZON = 64
DEFAULT_SAMPLES = 100_000


@dataclass(frozen=True)
class Estimate:
    hits: int
    samples: int
    horizon: int
    seed: int
    exact: Fraction  # st(P(E))

    @property
    def frequency(self) -> Fraction:
        return Fraction(self.hits, self.samples)

    @property
    def gap(self) -> float:
        return abs(float(self.frequency - self.exact))

    @property
    def halfwidth(self) -> float:
        """Three-sigma (99.7%) binomial half-width around the exact probability."""
        p = float(self.exact)
        return 3.0 * math.sqrt(p * (1.0 - p) / self.samples)

    @property
    def within(self) -> bool:
        return self.gap <= self.halfwidth


def _block_bits(seed: int, block: int, count: int, horizon: int) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(block,))))
    # column k holds the value at index k+1; 0 = H, 1 = T
    return rng.integers(0, 2, size=(count, horizon), dtype=np.uint8)


def membership(e: CoinEvent, bits: np.ndarray) -> np.ndarray:
    """Vectorized membership of sampled prefixes, rows of ``bits``.

    Exceptional points are matched on the sampled window only.
    """
    rows, horizon = bits.shape
    if e.indices:
        code = np.zeros(rows, dtype=np.int64)
        for i in e.indices:
            code = (code << 1) | bits[:, i - 1]
        table = np.zeros(1 << len(e.indices), dtype=bool)
        for word in e.atoms:
            table[int(word.replace("H", "0").replace("T", "1"), 2)] = True
        inside = table[code]
    else:
        inside = np.full(rows, bool(e.atoms))
    for pts, value in ((e.plus, True), (e.minus, False)):
        for p in pts:
            pattern = np.array([p[k] == "T" for k in range(1, horizon + 1)], dtype=np.uint8)
            inside[np.all(bits == pattern, axis=1)] = value
    return inside


def _count_block(e, seed, block, samples, horizon) -> int:
    start = block * BLOCK_SIZE
    count = min(BLOCK_SIZE, samples - start)
    return int(np.count_nonzero(membership(e, _block_bits(seed, block, count, horizon))))


def count_hits(
    e: CoinEvent, samples: int, horizon: int, seed: int, blocks: Optional[Iterable[int]] = None
) -> int:
    """Hits over the given blocks (all blocks by default)."""
    if blocks is None:
        blocks = range(-(-samples // BLOCK_SIZE))
    return sum(_count_block(e, seed, b, samples, horizon) for b in blocks)


def estimate(
    e: CoinEvent,
    samples: int = DEFAULT_SAMPLES,
    horizon: Optional[int] = None,
    seed: int = 0,
    workers: int = 1,
) -> Estimate:
    if not isinstance(e, CoinEvent):
        raise ModelMismatchError("estimation is only defined for coin events")
    if samples < 1:
        raise PreconditionError("sample count must be at least 1")
    needed = e.max_index()
    if horizon is None:
        horizon = max(DEFAULT_HORIZON, needed)
    if horizon < max(needed, 1):
        raise PreconditionError(f"horizon {horizon} is smaller than the largest index used ({needed})")
    nblocks = -(-samples // BLOCK_SIZE)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(lambda b: _count_block(e, seed, b, samples, horizon), range(nblocks)))
    else:
        hits = count_hits(e, samples, horizon, seed)
    exact = standard_part(probability(coin_context(), e))
    return Estimate(hits, samples, horizon, seed, exact)
