"""Seeded random generators of canonical events, for property suites and tests."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Optional

from .events import CoinPoint, FiniteSpace, coin, interval


def rational(rng: random.Random, span: int = 10, max_den: int = 6) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(-span * den, span * den), den)


def coin_point(rng: random.Random, max_prefix: int = 6) -> CoinPoint:
    prefix = "".join(rng.choice("HT") for _ in range(rng.randint(0, max_prefix)))
    return CoinPoint(prefix, rng.choice("HT"))


def coin_event(
    rng: random.Random, max_index: int = 6, max_codim: int = 4, max_points: int = 3
) -> coin.CoinEvent:
    k = rng.randint(0, min(max_codim, max_index))
    indices = sorted(rng.sample(range(1, max_index + 1), k))
    words = ["".join(w) for w in itertools.product("HT", repeat=k)]
    atoms = [w for w in words if rng.random() < 0.5]
    plus = [coin_point(rng) for _ in range(rng.randint(0, max_points))]
    minus = [coin_point(rng) for _ in range(rng.randint(0, max_points))]
    return coin.make_coin_event(indices, atoms, plus, minus)


def interval_event(rng: random.Random, max_intervals: int = 3, max_points: int = 3) -> interval.IntervalEvent:
    ivs = []
    for _ in range(rng.randint(0, max_intervals)):
        a = rational(rng)
        ivs.append((a, a + Fraction(rng.randint(1, 12), rng.randint(1, 4))))
    base = interval.make_interval_event(ivs)
    # bias exceptional points toward endpoints and interior points so they survive canonicalization
    candidates = [x for pair in base.intervals for x in (pair[0], pair[1], (pair[0] + pair[1]) / 2)]

    def pick():
        if candidates and rng.random() < 0.6:
            return rng.choice(candidates)
        return rational(rng)
    plus = [pick() for _ in range(rng.randint(0, max_points))]
    minus = [pick() for _ in range(rng.randint(0, max_points))]
    return interval.make_interval_event(base.intervals, plus, minus)


def finite_space(size: int = 6) -> FiniteSpace:
    return FiniteSpace(tuple(f"x{k}" for k in range(size)))


def finite_event(rng: random.Random, space: FiniteSpace):
    return space.event(lab for lab in space.labels if rng.random() < 0.5)


def event(rng: random.Random, model: str, space: Optional[FiniteSpace] = None):
    if model == "coin":
        return coin_event(rng)
    if model == "interval":
        return interval_event(rng)
    if model == "finite":
        return finite_event(rng, space or finite_space())
    raise ValueError(f"unknown model {model!r}")


def singleton(rng: random.Random, model: str, space: Optional[FiniteSpace] = None):
    if model == "coin":
        return coin.points([coin_point(rng)])
    if model == "interval":
        return interval.points([rational(rng)])
    space = space or finite_space()
    return space.event([rng.choice(space.labels)])
