"""Canonical events and their Boolean algebra in three ground models.

``coin``: the coin-toss space; ``interval``: the real line; ``finite``:
explicit finite spaces.  The functions here dispatch on the model of their
operands and refuse to mix models.
"""

from __future__ import annotations

from typing import Union

from ..errors import ModelMismatchError, ValidationError
from . import coin, finite, interval
from .coin import CoinEvent, CoinPoint
from .finite import FiniteEvent, FiniteSpace
from .interval import IntervalEvent

Event = Union[CoinEvent, IntervalEvent, FiniteEvent]

_MODULES = {CoinEvent: coin, IntervalEvent: interval, FiniteEvent: finite}

MODELS = ("coin", "interval", "finite")

__all__ = [
    "Event",
    "CoinEvent",
    "CoinPoint",
    "IntervalEvent",
    "FiniteEvent",
    "FiniteSpace",
    "MODELS",
    "coin",
    "interval",
    "finite",
    "model_of",
    "normalize",
    "validate",
    "union",
    "intersect",
    "difference",
    "complement",
    "is_subset",
    "is_equal",
    "contains",
]


def _module(e):
    try:
        return _MODULES[type(e)]
    except KeyError:
        raise ValidationError(f"not an event: {e!r}") from None


def model_of(e: Event) -> str:
    _module(e)
    return e.model


def _pair(a, b):
    mod = _module(a)
    if _module(b) is not mod:
        raise ModelMismatchError(f"cannot combine a {a.model} event with a {b.model} event")
    return mod


def normalize(e: Event) -> Event:
    return _module(e).normalize(e)


def validate(e: Event) -> None:
    _module(e).validate(e)


def union(a: Event, b: Event) -> Event:
    return _pair(a, b).union(a, b)


def intersect(a: Event, b: Event) -> Event:
    return _pair(a, b).intersect(a, b)


def difference(a: Event, b: Event) -> Event:
    return _pair(a, b).difference(a, b)


def complement(e: Event) -> Event:
    return _module(e).complement(e)


def is_subset(a: Event, b: Event) -> bool:
    return difference(a, b).is_empty()


def is_equal(a: Event, b: Event) -> bool:
    _pair(a, b)
    return a == b


def contains(e: Event, point) -> bool:
    _module(e)
    if isinstance(e, CoinEvent) and not isinstance(point, CoinPoint):
        raise ValidationError(f"coin events contain CoinPoints, got {point!r}")
    return point in e
