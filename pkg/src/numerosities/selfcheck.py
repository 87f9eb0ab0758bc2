"""Seeded property suites run by ``numerosities oracle``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from . import randgen
from .events import coin, difference, interval, intersect, is_subset, union
from .measures import kolmogorov_measure, lebesgue_measure
from .nafield import NAValue, OMEGA, standard_part
from .numerosity import context_for, nbeta, numerosity, probability, coin_context, interval_context


@dataclass
class SuiteResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""


def _run(name, cases, body) -> SuiteResult:
    failures = [k for k in range(cases) if not body(k)]
    detail = f"first failing case {failures[0]}" if failures else ""
    return SuiteResult(name, not failures, cases, detail)


def run_suites(seed: int = 0, cases: int = 200) -> List[SuiteResult]:
    rng = random.Random(seed)
    space = randgen.finite_space(6)
    results = []

    for model in ("coin", "interval", "finite"):
        def additive(_, model=model):
            a = randgen.event(rng, model, space)
            b = difference(randgen.event(rng, model, space), a)
            ctx = context_for(a)
            return numerosity(ctx, union(a, b)) == numerosity(ctx, a) + numerosity(ctx, b)

        def unit(_, model=model):
            s = randgen.singleton(rng, model, space)
            return numerosity(context_for(s), s) == 1

        def zero_iff_empty(_, model=model):
            a = randgen.event(rng, model, space)
            return (numerosity(context_for(a), a) == 0) == a.is_empty()

        def strict(_, model=model):
            b = union(randgen.event(rng, model, space), randgen.singleton(rng, model, space))
            a = intersect(b, randgen.event(rng, model, space))
            if a == b:
                a = difference(b, randgen.singleton(rng, model, space))
            if a == b:
                return True
            ctx = context_for(a)
            return is_subset(a, b) and numerosity(ctx, a) < numerosity(ctx, b)

        results.append(_run(f"{model}: additivity", cases, additive))
        results.append(_run(f"{model}: unit size", cases, unit))
        results.append(_run(f"{model}: zero only for the empty event", cases, zero_iff_empty))
        results.append(_run(f"{model}: proper subsets are smaller", cases, strict))

    def cylinder_exact(_):
        n = rng.randint(0, 10)
        idx = rng.sample(range(1, 21), n)
        word = [rng.choice("HT") for _ in idx]
        c = coin.cylinder(zip(idx, word))
        return probability(coin_context(), c) == Fraction(1, 2**n)

    def st_matches_kolmogorov(_):
        e = randgen.coin_event(rng)
        return standard_part(probability(coin_context(), e)) == kolmogorov_measure(e)

    def translation(_):
        a = Fraction(rng.randint(1, 100), rng.randint(1, 100))
        x, y = randgen.rational(rng), randgen.rational(rng)
        ctx = interval_context()
        nx = numerosity(ctx, interval.interval(x, x + a))
        return nx == numerosity(ctx, interval.interval(y, y + a)) == a * OMEGA

    def st_matches_lebesgue(_):
        e = randgen.interval_event(rng)
        return nbeta(interval_context(), e) == lebesgue_measure(e)

    def nbeta_units(_):
        s = randgen.singleton(rng, "interval")
        ctx = interval_context()
        return nbeta(ctx, s, OMEGA) == 0 and nbeta(ctx, s, NAValue(5)) == Fraction(1, 5)

    results.append(_run("coin: cylinder probability is 2^-n", cases, cylinder_exact))
    results.append(_run("coin: st(P(E)) equals the Kolmogorov measure", cases, st_matches_kolmogorov))
    results.append(_run("interval: translation invariance and rational scaling", cases, translation))
    results.append(_run("interval: n_beta equals Lebesgue measure", cases, st_matches_lebesgue))
    results.append(_run("n_beta: singleton weight 0 (beta = w) and 1/5 (beta = 5)", cases, nbeta_units))
    return results
