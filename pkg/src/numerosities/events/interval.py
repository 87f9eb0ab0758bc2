"""Events on the real line: finite unions of rational half-open intervals ``[a, b)``
adjusted by finite sets of rational points.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, FrozenSet, Iterable, Tuple

from ..errors import UnsupportedOperationError, ValidationError

Interval = Tuple[Fraction, Fraction]


def _rational(x) -> Fraction:
    if isinstance(x, bool):
        raise ValidationError("booleans are not rational numbers")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError):
            pass
    raise ValidationError(f"only exact rationals are accepted, got {x!r}")


@dataclass(frozen=True)
class IntervalEvent:
    """Canonical event: ``intervals`` are sorted, disjoint and non-adjacent.

    ``plus`` holds points outside every interval, ``minus`` points inside one
    (a removed left endpoint stays in ``minus``).
    """

    intervals: Tuple[Interval, ...]
    plus: FrozenSet[Fraction] = frozenset()
    minus: FrozenSet[Fraction] = frozenset()

    model = "interval"

    def in_base(self, x) -> bool:
        k = bisect.bisect_right(self._starts(), x) - 1
        return k >= 0 and x < self.intervals[k][1]

    def _starts(self):
        return [a for a, _ in self.intervals]

    def __contains__(self, x) -> bool:
        x = _rational(x)
        if x in self.plus:
            return True
        if x in self.minus:
            return False
        return self.in_base(x)

    def is_empty(self) -> bool:
        return not self.intervals and not self.plus

    def length(self) -> Fraction:
        return sum((b - a for a, b in self.intervals), Fraction(0))

    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __sub__(self, other):
        return difference(self, other)

    def __invert__(self):
        return complement(self)


def _merge(intervals: Iterable[Interval]) -> Tuple[Interval, ...]:
    out = []
    for a, b in sorted(intervals):
        if out and a <= out[-1][1]:
            if b > out[-1][1]:
                out[-1] = (out[-1][0], b)
        else:
            out.append((a, b))
    return tuple(out)


def make_interval_event(
    intervals: Iterable[Tuple[object, object]] = (),
    plus: Iterable[object] = (),
    minus: Iterable[object] = (),
) -> IntervalEvent:
    """Validate and canonicalize ``(union of intervals | plus) - minus``."""
    ivs = []
    for pair in intervals:
        try:
            a, b = pair
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"interval must be a pair (a, b), got {pair!r}") from exc
        a, b = _rational(a), _rational(b)
        if a >= b:
            raise ValidationError(f"interval [{a}, {b}) needs a < b")
        ivs.append((a, b))
    base = IntervalEvent(_merge(ivs))
    plus = frozenset(_rational(x) for x in plus)
    minus = frozenset(_rational(x) for x in minus)
    return IntervalEvent(
        base.intervals,
        frozenset(x for x in plus if x not in minus and not base.in_base(x)),
        frozenset(x for x in minus if base.in_base(x)),
    )


def normalize(e: IntervalEvent) -> IntervalEvent:
    return make_interval_event(e.intervals, e.plus, e.minus)


def empty() -> IntervalEvent:
    return IntervalEvent(())


def interval(a, b) -> IntervalEvent:
    return make_interval_event([(a, b)])


def points(xs: Iterable[object]) -> IntervalEvent:
    return make_interval_event((), xs)


def _combine(a: IntervalEvent, b: IntervalEvent, op: Callable[[bool, bool], bool]) -> IntervalEvent:
    if op(False, False):
        raise UnsupportedOperationError("result would be unbounded on the real line")
    cuts = sorted(set(itertools.chain.from_iterable(a.intervals + b.intervals)))
    # membership of the base sets is constant on each [cuts[k], cuts[k+1])
    pieces = [
        (lo, hi)
        for lo, hi in zip(cuts, cuts[1:])
        if op(a.in_base(lo), b.in_base(lo))
    ]
    base = IntervalEvent(_merge(pieces))
    plus, minus = set(), set()
    for x in a.plus | a.minus | b.plus | b.minus:
        want = op(x in a, x in b)
        if want != base.in_base(x):
            (plus if want else minus).add(x)
    return IntervalEvent(base.intervals, frozenset(plus), frozenset(minus))


def union(a: IntervalEvent, b: IntervalEvent) -> IntervalEvent:
    return _combine(a, b, lambda x, y: x or y)


def intersect(a: IntervalEvent, b: IntervalEvent) -> IntervalEvent:
    return _combine(a, b, lambda x, y: x and y)


def difference(a: IntervalEvent, b: IntervalEvent) -> IntervalEvent:
    return _combine(a, b, lambda x, y: x and not y)


def complement(e: IntervalEvent) -> IntervalEvent:
    raise UnsupportedOperationError(
        "absolute complement is unbounded on the real line; use a relative difference"
    )


def validate(e: IntervalEvent) -> None:
    """Raise :class:`ValidationError` unless ``e`` is in canonical form."""
    for a, b in e.intervals:
        if not (isinstance(a, Fraction) and isinstance(b, Fraction)) or a >= b:
            raise ValidationError(f"bad interval ({a!r}, {b!r})")
    for (_, b), (a, _) in zip(e.intervals, e.intervals[1:]):
        if not b < a:
            raise ValidationError("intervals must be sorted, disjoint and non-adjacent")
    if any(e.in_base(x) for x in e.plus):
        raise ValidationError("plus point lies inside an interval")
    if any(not e.in_base(x) for x in e.minus):
        raise ValidationError("minus point lies outside every interval")
