"""Exact numerosities of represented events and the quantities derived from them.

The unit choices are ``n(Omega) = w`` in the coin model and
``n([0, 1)) = w`` in the interval model; in a finite space the numerosity is
the cardinality.  With these choices a cylinder over ``k`` indices has
numerosity ``w / 2**k`` and ``[x, x + a)`` has numerosity ``a * w``, and
every probability of a represented coin event is an exact division by a
monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import EmptyConditionError, ModelMismatchError, PreconditionError, ValidationError
from .events import CoinEvent, Event, FiniteEvent, FiniteSpace, IntervalEvent, is_subset, intersect
from .nafield import (
    DEFAULT_ORDER,
    OMEGA,
    ExtendedReal,
    Kind,
    NAValue,
    classify,
    div,
    quotient_standard_part,
)

__all__ = [
    "NumerosityContext",
    "coin_context",
    "interval_context",
    "finite_context",
    "context_for",
    "numerosity",
    "probability",
    "conditional",
    "nbeta",
    "MonotonicityVerdict",
    "check_strict_monotonicity",
]

_EXP0, _EXP_NEG1 = Fraction(0), Fraction(-1)
_EVENT_TYPES = {"coin": CoinEvent, "interval": IntervalEvent, "finite": FiniteEvent}


@dataclass(frozen=True)
class NumerosityContext:
    """A ground model together with its numerosity unit and measure unit ``beta``.

    ``unit`` is ``n(Omega)`` (coin), ``n([0, 1))`` (interval) or the
    cardinality of the universe (finite).
    """

    model: str
    unit: NAValue
    beta: NAValue
    space: Optional[FiniteSpace] = None

    def __post_init__(self):
        if self.model not in _EVENT_TYPES:
            raise ValidationError(f"unknown model {self.model!r}")
        if self.beta <= 0:
            raise ValidationError("beta must be positive")
        if self.model == "finite":
            if self.space is None or self.unit != len(self.space):
                raise ValidationError("finite-model unit must equal the universe cardinality")
        elif classify(self.unit) is not Kind.INFINITE:
            raise ValidationError("coin and interval units must be infinite")

    def check(self, e) -> None:
        if not isinstance(e, _EVENT_TYPES[self.model]):
            raise ModelMismatchError(f"expected a {self.model} event, got {type(e).__name__}")
        if self.space is not None and e.space != self.space:
            raise ModelMismatchError("event belongs to a different finite space")


def coin_context(beta: Optional[NAValue] = None) -> NumerosityContext:
    return NumerosityContext("coin", OMEGA, OMEGA if beta is None else NAValue(beta))


def interval_context(beta: Optional[NAValue] = None) -> NumerosityContext:
    return NumerosityContext("interval", OMEGA, OMEGA if beta is None else NAValue(beta))


def finite_context(space: FiniteSpace, beta=None) -> NumerosityContext:
    unit = NAValue(len(space))
    return NumerosityContext("finite", unit, unit if beta is None else NAValue(beta), space)


def context_for(e: Event) -> NumerosityContext:
    if isinstance(e, CoinEvent):
        return coin_context()
    if isinstance(e, IntervalEvent):
        return interval_context()
    if isinstance(e, FiniteEvent):
        return finite_context(e.space)
    raise ValidationError(f"not an event: {e!r}")


def numerosity(ctx: NumerosityContext, e: Event) -> NAValue:
    ctx.check(e)
    if isinstance(e, CoinEvent):
        base = ctx.unit * Fraction(len(e.atoms), 1 << len(e.indices))
        points = len(e.plus) - len(e.minus)
        return base + points if points else base
    if isinstance(e, IntervalEvent):
        return ctx.unit * e.length() + (len(e.plus) - len(e.minus))
    return NAValue(len(e.members))


def probability(ctx: NumerosityContext, e: CoinEvent) -> NAValue:
    """``n(E) / n(Omega)``; exact because the unit is a monomial."""
    if ctx.model != "coin":
        raise ModelMismatchError("probability is defined for the coin model")
    if ctx.unit == OMEGA:
        # |atoms| / 2^|I| + (|plus| - |minus|) * w^-1, without the general division
        ctx.check(e)
        base = Fraction(len(e.atoms), 1 << len(e.indices))
        points = len(e.plus) - len(e.minus)
        terms = ((_EXP0, base),) if base else ()
        if points:
            terms += ((_EXP_NEG1, Fraction(points)),)
        return NAValue._raw(terms)
    q, exact = div(numerosity(ctx, e), ctx.unit)
    assert exact
    return q


def conditional(ctx: NumerosityContext, e: Event, f: Event, order: int = DEFAULT_ORDER):
    """``(n(E & F) / n(F), exact)``.  For finite ``F`` this is ``|E & F| / |F|``."""
    ctx.check(e)
    ctx.check(f)
    if f.is_empty():
        raise EmptyConditionError("cannot condition on the empty event")
    return div(numerosity(ctx, intersect(e, f)), numerosity(ctx, f), order)


def nbeta(ctx: NumerosityContext, e: Event, beta=None) -> ExtendedReal:
    """Standard part of ``n(E) / beta`` (``beta`` defaults to the context's)."""
    beta = ctx.beta if beta is None else NAValue(beta)
    if beta <= 0:
        raise ValidationError("beta must be positive")
    return quotient_standard_part(numerosity(ctx, e), beta)


@dataclass(frozen=True)
class MonotonicityVerdict:
    proper: bool
    smaller: NAValue
    larger: NAValue

    @property
    def holds(self) -> bool:
        """Strict inequality for a proper subset, equality otherwise."""
        return self.smaller < self.larger if self.proper else self.smaller == self.larger


def check_strict_monotonicity(ctx: NumerosityContext, e1: Event, e2: Event) -> MonotonicityVerdict:
    if not is_subset(e1, e2):
        raise PreconditionError("first event must be a subset of the second")
    return MonotonicityVerdict(e1 != e2, numerosity(ctx, e1), numerosity(ctx, e2))
