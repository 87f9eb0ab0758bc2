"""Acceptance criteria 1-9, each at its stated count and tolerance.

Every test prints one ``criterion N: PASS|FAIL`` line (visible with ``-s``;
the lines are also repeated in the pytest terminal summary).
"""

import itertools
import math
import random
import time
from fractions import Fraction

from numerosities import NAValue, OMEGA, ONE, ZERO, dsl, randgen
from numerosities.events import coin, difference, interval, is_subset, union
from numerosities.measures import FiniteMeasure, finite_oracle, inner_measure, kolmogorov_measure, outer_measure
from numerosities.montecarlo import estimate
from numerosities.nafield import Kind, classify, div, standard_part
from numerosities.numerosity import (
    coin_context,
    conditional,
    context_for,
    interval_context,
    nbeta,
    numerosity,
    probability,
)

F = Fraction
VERDICTS = []


def verdict(number, title, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title} ({detail})"
    VERDICTS.append(line)
    print(line)
    assert ok, line


# 1 ---------------------------------------------------------------------------


def test_criterion_1_cylinder_exactness():
    rng = random.Random(101)
    ctx = coin_context()
    cases = [(n, rng.sample(range(1, 21), n)) for n in (rng.randint(0, 10) for _ in range(200))]
    start = time.perf_counter()
    bad = atoms = 0
    for n, idx in cases:
        want = F(1, 2**n)
        for word in itertools.product("HT", repeat=n):
            atoms += 1
            p = probability(ctx, coin.cylinder(zip(idx, word)))
            bad += p != want
    elapsed = time.perf_counter() - start
    verdict(
        1,
        "P(cylinder) = 2^-n exactly",
        bad == 0 and elapsed < 1.0,
        f"200 index sets, {atoms} atoms, {bad} mismatches, {elapsed:.2f}s < 1s",
    )


# 2 ---------------------------------------------------------------------------


def test_criterion_2_conditional_counting():
    rng = random.Random(202)
    ctx = coin_context()
    start = time.perf_counter()
    bad = 0
    for _ in range(1000):
        pts = {randgen.coin_point(rng, max_prefix=5) for _ in range(rng.randint(1, 8))}
        f = coin.points(pts)
        e = randgen.coin_event(rng)
        # mix some of F into E's exceptional sets so both branches are exercised
        chosen = [p for p in pts if rng.random() < 0.3]
        e = union(e, coin.points(chosen[: len(chosen) // 2]))
        e = difference(e, coin.points(chosen[len(chosen) // 2:]))
        hits = sum(1 for p in pts if p in e)
        q, exact = conditional(ctx, e, f)
        bad += not (exact and q == F(hits, len(pts)))
    elapsed = time.perf_counter() - start
    verdict(
        2,
        "P(E|F) = |E & F| / |F| for finite F",
        bad == 0 and elapsed < 5.0,
        f"1000 cases, {bad} mismatches, {elapsed:.2f}s < 5s",
    )


# 3 ---------------------------------------------------------------------------


def test_criterion_3_standard_part_is_kolmogorov():
    rng = random.Random(303)
    ctx = coin_context()
    bad = 0
    for _ in range(1000):
        e = randgen.coin_event(rng, max_index=10, max_codim=6)
        bad += standard_part(probability(ctx, e)) != kolmogorov_measure(e)
    verdict(3, "st(P(E)) = Kolmogorov measure", bad == 0, f"1000 events, {bad} mismatches")


# 4 ---------------------------------------------------------------------------


def test_criterion_4_interval_translation_and_scaling():
    rng = random.Random(404)
    ctx = interval_context()
    beta = ctx.unit
    bad = 0
    for _ in range(500):
        x, y = randgen.rational(rng, span=1000, max_den=100), randgen.rational(rng, span=1000, max_den=100)
        p, q = rng.randint(1, 100), rng.randint(1, 100)
        a = F(p, q)
        nx = numerosity(ctx, interval.interval(x, x + a))
        ny = numerosity(ctx, interval.interval(y, y + a))
        bad += not (nx == ny == beta * a)
    verdict(4, "n([x,x+a)) = n([y,y+a)) = (p/q)*beta", bad == 0, f"500 cases, {bad} mismatches")


# 5 ---------------------------------------------------------------------------


def _proper_pair(rng, model, space):
    while True:
        a = randgen.event(rng, model, space)
        outside = [s for s in (randgen.singleton(rng, model, space) for _ in range(20)) if not is_subset(s, a)]
        if outside:
            s = outside[0]
            break
    b = union(union(a, s), randgen.event(rng, model, space) if rng.random() < 0.5 else a)
    return a, b


def test_criterion_5_numerosity_axioms():
    space = randgen.finite_space(8)
    failures = {"additivity": 0, "unit": 0, "strict": 0, "zero": 0}
    for seed, model in enumerate(("coin", "interval", "finite"), start=501):
        rng = random.Random(seed)
        for _ in range(2000):
            a = randgen.event(rng, model, space)
            b = difference(randgen.event(rng, model, space), a)
            ctx = context_for(a)
            na, nb = numerosity(ctx, a), numerosity(ctx, b)
            failures["additivity"] += numerosity(ctx, union(a, b)) != na + nb
            for e, n in ((a, na), (b, nb)):
                failures["zero"] += (n == 0) != e.is_empty()
            s = randgen.singleton(rng, model, space)
            failures["unit"] += numerosity(ctx, s) != 1
        empty = {"coin": coin.empty(), "interval": interval.empty(), "finite": space.empty()}[model]
        failures["zero"] += numerosity(context_for(empty), empty) != 0
        for _ in range(500):
            a, b = _proper_pair(rng, model, space)
            ok = is_subset(a, b) and a != b and numerosity(context_for(a), a) < numerosity(context_for(b), b)
            failures["strict"] += not ok
    total = sum(failures.values())
    detail = ", ".join(f"{k} failures {v}" for k, v in failures.items())
    verdict(
        5,
        "elementary numerosity axioms",
        total == 0,
        f"per model: 2000 disjoint pairs, 2000 singletons, 500 proper pairs; {detail}",
    )


# 6 ---------------------------------------------------------------------------


def test_criterion_6_inner_outer():
    rng = random.Random(606)
    bad = 0
    for gen in (randgen.coin_event, randgen.interval_event):
        for _ in range(500):
            e = gen(rng)
            # represented coin / interval events are all algebra members: equality
            bad += inner_measure(None, e) != outer_measure(e)

    space = randgen.finite_space(8)
    labels = list(space.labels)
    rng.shuffle(labels)
    m8 = FiniteMeasure(space, [labels[:3], labels[3:5], labels[5:]], [F(3, 2), 1, F(3, 2)])
    members = 0
    for _ in range(500):
        e = randgen.finite_event(rng, space)
        inner, outer = inner_measure(None, e, m8), outer_measure(e, m8)
        bad += inner > outer
        if m8.is_member(e):
            members += 1
            bad += inner != outer

    # exhaustive: 12 points, strict subalgebra with 4 atoms, mu proportional to cardinality
    big = randgen.finite_space(12)
    atoms = [big.labels[0:2], big.labels[2:5], big.labels[5:9], big.labels[9:]]
    m12 = FiniteMeasure(big, atoms, [F(len(a), 6) for a in atoms])
    strict = equal_members = 0
    for x in range(1 << 12):
        inner, outer = m12.inner(x), m12.outer(x)
        bad += inner > outer
        if m12.is_member(x):
            equal_members += inner == outer
            bad += inner != outer
        strict += inner < outer
    report = finite_oracle(m12)
    ok = bad == 0 and strict > 0 and report.passed and equal_members == 16
    verdict(
        6,
        "inner <= outer, equal on algebra members",
        ok,
        f"500 events per model ({members} finite members), exhaustive 4096 subsets of |Omega|=12: "
        f"{strict} with inner < outer, {equal_members} members equal, {bad} violations",
    )


# 7 ---------------------------------------------------------------------------


def _random_value(rng, finite=False, max_terms=3):
    top = 0 if finite else 3
    exps = rng.sample(range(-3, top + 1), rng.randint(0, max_terms))
    return NAValue({e: F(rng.randint(-9, 9), rng.randint(1, 5)) for e in exps})


def _random_monomial(rng):
    c = 0
    while not c:
        c = F(rng.randint(-9, 9), rng.randint(1, 5))
    return NAValue.monomial(c, F(rng.randint(-6, 6), rng.randint(1, 3)))


def test_criterion_7_field_correctness():
    rng = random.Random(707)
    failures = {"axioms": 0, "st": 0, "monomial div": 0, "residual": 0}
    for _ in range(5000):
        x, y, z = (_random_value(rng) for _ in range(3))
        axioms = [
            x + y == y + x,
            x * y == y * x,
            (x + y) + z == x + (y + z),
            (x * y) * z == x * (y * z),
            x * (y + z) == x * y + x * z,
            x + ZERO == x and x * ONE == x,
            x + (-x) == ZERO,
            [x < y, x == y, x > y].count(True) == 1,
            not (x < y) or x + z < y + z,
            not (x > 0 and y > 0) or x * y > 0,
            not (x <= y <= z) or x <= z,
        ]
        if not x.is_zero():
            q, exact = div(ONE, x)
            axioms.append(not exact or x * q == ONE)
        failures["axioms"] += not all(axioms)

        fx, fy = _random_value(rng, finite=True), _random_value(rng, finite=True)
        failures["st"] += not (
            standard_part(fx + fy) == standard_part(fx) + standard_part(fy)
            and standard_part(fx * fy) == standard_part(fx) * standard_part(fy)
            and classify(fx) is not Kind.INFINITE
        )

        m = _random_monomial(rng)
        q, exact = div(x, m)
        failures["monomial div"] += not (exact and q * m == x)

        k = rng.randint(1, 16)
        d = _random_value(rng)
        if not d.is_zero():
            q, exact = div(ONE, d, k)
            residual = d * q - ONE
            failures["residual"] += not (residual.is_zero() or residual.leading_exponent <= -k)
            failures["residual"] += exact != residual.is_zero()
    total = sum(failures.values())
    detail = ", ".join(f"{k} failures {v}" for k, v in failures.items())
    verdict(7, "ordered-field axioms, st homomorphism, division", total == 0, f"5000 triples; {detail}")


# 8 ---------------------------------------------------------------------------


def test_criterion_8_nbeta_units():
    rng = random.Random(808)
    bad = 0
    five = NAValue(5)
    for gen, ctx in ((randgen.interval_event, interval_context()), (randgen.coin_event, coin_context())):
        model = ctx.model
        for _ in range(500):
            a = gen(rng)
            b = difference(gen(rng), a)
            bad += nbeta(ctx, union(a, b), OMEGA) != nbeta(ctx, a, OMEGA) + nbeta(ctx, b, OMEGA)
            s = randgen.singleton(rng, model)
            bad += nbeta(ctx, s, OMEGA) != 0
            bad += nbeta(ctx, s, five) != F(1, 5)
    verdict(8, "n_beta additive; singleton 0 for beta=w, 1/5 for beta=5", bad == 0, f"1000 pairs and singletons, {bad} failures")


# 9 ---------------------------------------------------------------------------

MC_EVENTS = [
    ("C(1:H)", F(1, 2)),
    ("C(5:T) \\ {HHHHT(H)}", F(1, 2)),
    ("C(1:H, 2:H) | C(1:T, 2:T)", F(1, 2)),
    ("C(2:H, 3:T)", F(1, 4)),
    ("C(10:T) & C(20:H)", F(1, 4)),
    ("C(1:H) & C(2:H) | {TT(T)}", F(1, 4)),
    ("C(1:H, 2:T, 3:H)", F(1, 8)),
    ("C(4:T, 8:T, 16:T)", F(1, 8)),
    ("C(1:H, 2:H) | C(1:T, 2:T, 3:T)", F(3, 8)),
    ("C(30:H, 40:H) | C(30:T, 40:T, 50:H) \\ {T(H)}", F(3, 8)),
]


def test_criterion_9_monte_carlo():
    n, seed = 100_000, 0
    start = time.perf_counter()
    rows, ok = [], True
    for src, p in MC_EVENTS:
        e = dsl.evaluate(src, "coin")
        est = estimate(e, n, seed=seed)
        bound = 3 * math.sqrt(float(p) * (1 - float(p)) / n)
        good = est.exact == p and abs(float(est.frequency) - float(p)) <= bound
        ok &= good
        rows.append(f"{src}: {float(est.frequency):.5f} vs {p} (+-{bound:.5f})")
    elapsed = time.perf_counter() - start
    for row in rows:
        print("   ", row)
    verdict(9, "Monte Carlo frequency within 3 sigma", ok and elapsed < 10.0, f"10 events, N=1e5, seed 0, {elapsed:.2f}s < 10s")
