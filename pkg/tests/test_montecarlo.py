import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numerosities import randgen
from numerosities.errors import ModelMismatchError, PreconditionError
from numerosities.events import CoinPoint, coin, difference, interval
from numerosities.montecarlo import BLOCK_SIZE, count_hits, estimate, membership


def test_codim_two_cylinder_within_band():
    est = estimate(coin.cylinder({2: "H", 5: "T"}), samples=100_000, seed=0)
    assert est.exact == Fraction(1, 4)
    assert est.halfwidth == pytest.approx(3 * (0.25 * 0.75 / 100_000) ** 0.5)
    assert est.within


def test_omega_and_points():
    assert estimate(coin.omega(), samples=5000).frequency == 1
    pts = coin.points([CoinPoint("HTH", "T"), CoinPoint("", "H")])
    est = estimate(pts, samples=5000)
    assert est.hits == 0 and est.exact == 0 and est.within


def test_removed_points_do_not_change_frequency():
    base = coin.cylinder({1: "T"})
    holed = difference(base, coin.points([CoinPoint("T", "H"), CoinPoint("TT", "H")]))
    assert estimate(holed, samples=20_000, seed=3).hits == estimate(base, samples=20_000, seed=3).hits


def test_deterministic_and_partition_independent():
    e = coin.cylinder({1: "H", 3: "H", 4: "T"})
    samples = 3 * BLOCK_SIZE + 17
    whole = count_hits(e, samples, 16, seed=11)
    blocks = list(range(4))
    random.Random(0).shuffle(blocks)
    parts = count_hits(e, samples, 16, 11, blocks[:2]) + count_hits(e, samples, 16, 11, blocks[2:])
    assert parts == whole
    a = estimate(e, samples, horizon=16, seed=11, workers=1)
    b = estimate(e, samples, horizon=16, seed=11, workers=4)
    assert a == b and a.hits == whole


def test_seed_changes_sample():
    e = coin.cylinder({1: "H"})
    assert estimate(e, 10_000, seed=1).hits != estimate(e, 10_000, seed=2).hits


def test_preconditions():
    with pytest.raises(PreconditionError):
        estimate(coin.cylinder({30: "H"}), 100, horizon=10)
    with pytest.raises(PreconditionError):
        estimate(coin.omega(), 0)
    with pytest.raises(ModelMismatchError):
        estimate(interval.interval(0, 1), 100)
    assert estimate(coin.cylinder({70: "H"}), 100).horizon == 70


@given(seed=st.integers(0, 2**32 - 1))
@settings(max_examples=30, deadline=None)
def test_membership_matches_event_semantics(seed):
    rng = random.Random(seed)
    e = randgen.coin_event(rng)
    horizon = 12
    rows = np.array([[rng.randint(0, 1) for _ in range(horizon)] for _ in range(200)], dtype=np.uint8)
    # plant every exceptional point among the rows
    pts = list(e.plus | e.minus)
    for k, p in enumerate(pts):
        rows[k] = [p[i] == "T" for i in range(1, horizon + 1)]
    got = membership(e, rows)
    for k, row in enumerate(rows):
        word = "".join("T" if b else "H" for b in row)
        # a window longer than every point prefix identifies the point when its tail continues
        candidates = [p for p in pts if all(p[i] == word[i - 1] for i in range(1, horizon + 1))]
        if candidates:
            assert got[k] == (candidates[0] in e.plus)
        else:
            assert got[k] == e.in_base(CoinPoint(word, "H"))
