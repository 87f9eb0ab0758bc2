"""Command-line interface.

Reports are ``key: value`` lines (or one JSON object with ``--json``).
Exit status: 0 on success, 1 on a domain error or a failed oracle check,
2 on usage, parse or spec-file errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import List, Optional, Tuple

from . import dsl
from .errors import DSLError, NumerosityError, SpecFileError
from .events import intersect, is_subset, union
from .measures import FiniteMeasure, finite_oracle, kolmogorov_measure, lebesgue_measure
from .montecarlo import DEFAULT_SAMPLES, estimate
from .nafield import DEFAULT_ORDER, compare, div, standard_part
from .numerosity import (
    check_strict_monotonicity,
    coin_context,
    conditional,
    finite_context,
    interval_context,
    nbeta,
    numerosity,
    probability,
)
from .selfcheck import run_suites
from .specfile import load_spec, parse_spec

Report = List[Tuple[str, object]]

BUILTIN_SPECS = {
    "halves": "universe: a b c d\ngen: a b\nmu: a b = 1/2\nmu: c d = 1/2\n",
    "powerset-counting": "universe: a b c d\ngen: a\ngen: b\ngen: c\n"
    "mu: a = 1\nmu: b = 1\nmu: c = 1\nmu: d = 1\n",
    "trivial-algebra": "universe: a b c d\nmu: a b c d = 1\n",
    "zero-measure": "universe: a b\ngen: a\nmu: a = 0\nmu: b = 0\n",
}


def fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, float) and math.isinf(x):
        return "+inf" if x > 0 else "-inf"
    return str(x)


def _session(args):
    measure: Optional[FiniteMeasure] = None
    if args.model == "finite":
        if not args.spec:
            raise SpecFileError("the finite model needs --spec PATH")
        measure = load_spec(args.spec)
        ctx = finite_context(measure.space, measure.beta)
    elif args.model == "coin":
        ctx = coin_context()
    else:
        ctx = interval_context()
    return ctx, measure


def _event(args, ctx, src):
    return dsl.evaluate(src, args.model, ctx.space)


def _sign_word(s: int) -> str:
    return {-1: "less", 0: "equal", 1: "greater"}[s]


def cmd_eval(args) -> Tuple[Report, int]:
    ctx, measure = _session(args)
    e = _event(args, ctx, args.expr)
    n = numerosity(ctx, e)
    report: Report = [("model", args.model), ("event", dsl.render(e)), ("numerosity", n)]
    if args.model == "coin":
        p = probability(ctx, e)
        report += [
            ("probability", p),
            ("exact", True),
            ("st", standard_part(p)),
            ("kolmogorov", kolmogorov_measure(e)),
        ]
    elif args.model == "interval":
        report += [("n_beta", nbeta(ctx, e)), ("lebesgue", lebesgue_measure(e))]
    else:
        report += [("in_algebra", measure.is_member(e)), ("outer", measure.outer(e))]
        if measure.beta is not None:
            report += [("beta", measure.beta), ("inner", measure.inner(e))]
    return report, 0


def cmd_prob(args) -> Tuple[Report, int]:
    ctx, _ = _session(args)
    if args.model == "interval":
        raise NumerosityError("probabilities need a finite-numerosity whole space; use the coin or finite model")
    e = _event(args, ctx, args.expr)
    report: Report = [("event", dsl.render(e))]
    if args.given is None:
        q, exact = div(numerosity(ctx, e), ctx.unit, args.order)
    else:
        f = _event(args, ctx, args.given)
        report.append(("given", dsl.render(f)))
        q, exact = conditional(ctx, e, f, args.order)
    report += [("probability", q), ("exact", exact), ("st", standard_part(q))]
    return report, 0


def _relation(a, b) -> str:
    sub, sup = is_subset(a, b), is_subset(b, a)
    if sub and sup:
        return "equal"
    if sub:
        return "proper-subset"
    if sup:
        return "proper-superset"
    return "disjoint" if intersect(a, b).is_empty() else "overlapping"


def cmd_compare(args) -> Tuple[Report, int]:
    ctx, _ = _session(args)
    a = _event(args, ctx, args.left)
    b = _event(args, ctx, args.right)
    na, nb = numerosity(ctx, a), numerosity(ctx, b)
    relation = _relation(a, b)
    report: Report = [
        ("left", dsl.render(a)),
        ("right", dsl.render(b)),
        ("relation", relation),
        ("numerosity_left", na),
        ("numerosity_right", nb),
        ("order", _sign_word(compare(na, nb))),
    ]
    if relation in ("equal", "proper-subset"):
        verdict = check_strict_monotonicity(ctx, a, b)
    elif relation == "proper-superset":
        verdict = check_strict_monotonicity(ctx, b, a)
    else:
        verdict = None
    if verdict is not None:
        report.append(("monotonicity", "ok" if verdict.holds else "violated"))
        return report, 0 if verdict.holds else 1
    report.append(("additivity", numerosity(ctx, union(a, b)) + numerosity(ctx, intersect(a, b)) == na + nb))
    return report, 0


def cmd_estimate(args) -> Tuple[Report, int]:
    if args.model != "coin":
        raise NumerosityError("estimate is only available in the coin model")
    ctx, _ = _session(args)
    e = _event(args, ctx, args.expr)
    est = estimate(e, args.samples, args.horizon, args.seed, args.workers)
    report: Report = [
        ("event", dsl.render(e)),
        ("samples", est.samples),
        ("horizon", est.horizon),
        ("seed", est.seed),
        ("hits", est.hits),
        ("frequency", f"{float(est.frequency):.6f}"),
        ("st", est.exact),
        ("gap", f"{est.gap:.6f}"),
        ("halfwidth", f"{est.halfwidth:.6f}"),
        ("within", est.within),
    ]
    return report, 0


def cmd_oracle(args) -> Tuple[Report, int]:
    if args.spec:
        specs = [(args.spec, load_spec(args.spec))]
    else:
        specs = [(name, parse_spec(text)) for name, text in BUILTIN_SPECS.items()]
    report: Report = []
    ok = True
    for name, measure in specs:
        result = finite_oracle(measure)
        ok &= result.passed
        report.append((f"spec {name}", f"{result.size} points, {result.atoms} atoms"))
        for c in result.checks:
            if c.info:
                status = "INFO"
            else:
                status = "n/a" if c.passed is None else ("PASS" if c.passed else "FAIL")
            report.append((f"  {c.name}", f"{status}{' (' + c.detail + ')' if c.detail else ''}"))
        report.append(("  caratheodory sets", len(result.caratheodory)))
        report.append(("  inner < outer sets", len(result.strict_inner)))
    for s in run_suites(args.seed, args.cases):
        ok &= s.passed
        status = "PASS" if s.passed else "FAIL"
        report.append((f"suite {s.name}", f"{status} ({s.cases} cases{', ' + s.detail if s.detail else ''})"))
    report.append(("result", "PASS" if ok else "FAIL"))
    return report, 0 if ok else 1


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    def d(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--model", choices=["coin", "interval", "finite"], default=d("coin"))
    parser.add_argument("--order", type=_positive, default=d(DEFAULT_ORDER), help="truncation order K")
    parser.add_argument("--seed", type=int, default=d(0))
    parser.add_argument("--samples", type=_positive, default=d(DEFAULT_SAMPLES))
    parser.add_argument("--horizon", type=_positive, default=d(None))
    parser.add_argument("--workers", type=_positive, default=d(1))
    parser.add_argument("--cases", type=_positive, default=d(200), help="cases per oracle property suite")
    parser.add_argument("--spec", metavar="PATH", default=d(None), help="finite-model spec file")
    parser.add_argument("--json", action="store_true", default=d(False))


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="numerosities", description="Exact numerosities, probabilities and measures of events."
    )
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="numerosity (and probability) of an event")
    p.add_argument("expr")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("prob", parents=[common], help="absolute or conditional probability")
    p.add_argument("expr")
    p.add_argument("--given", metavar="EXPR")
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("compare", parents=[common], help="set relation and numerosity order of two events")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("estimate", parents=[common], help="Monte Carlo frequency versus st(P(E))")
    p.add_argument("expr")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive finite-model oracle and property suites")
    p.set_defaults(func=cmd_oracle)
    return parser


def _emit(report: Report, as_json: bool, out) -> None:
    if as_json:
        payload = {}
        for key, value in report:
            key = key.strip()
            if isinstance(value, bool) or isinstance(value, int):
                payload[key] = value
            else:
                payload[key] = fmt(value)
        out.write(json.dumps(payload, ensure_ascii=False) + "\n")
    else:
        for key, value in report:
            out.write(f"{key}: {fmt(value)}\n")


def _diagnostic(exc: DSLError) -> str:
    lines = [f"error: {exc}"]
    if exc.source is not None:
        src_lines = exc.source.splitlines() or [""]
        if 1 <= exc.line <= len(src_lines):
            lines.append("  " + src_lines[exc.line - 1])
            lines.append("  " + " " * (exc.column - 1) + "^")
    return "\n".join(lines)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, status = args.func(args)
    except DSLError as exc:
        print(_diagnostic(exc), file=sys.stderr)
        return 2
    except SpecFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumerosityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(report, args.json, sys.stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())
