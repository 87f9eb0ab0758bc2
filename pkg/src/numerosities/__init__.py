"""Exact elementary numerosities on coin-toss, interval and finite event algebras."""

from .errors import (
    DSLError,
    DSLSemanticError,
    DSLSyntaxError,
    EmptyConditionError,
    InexactDivisionError,
    ModelMismatchError,
    NumerosityError,
    PreconditionError,
    SpecFileError,
    UnsupportedOperationError,
    ValidationError,
)
from .events import (
    CoinEvent,
    CoinPoint,
    FiniteEvent,
    FiniteSpace,
    IntervalEvent,
    complement,
    contains,
    difference,
    intersect,
    is_equal,
    is_subset,
    normalize,
    union,
    validate,
)
from .nafield import OMEGA, ONE, ZERO, Kind, NAValue, classify, compare, div, standard_part
from .numerosity import (
    NumerosityContext,
    check_strict_monotonicity,
    coin_context,
    conditional,
    finite_context,
    interval_context,
    nbeta,
    numerosity,
    probability,
)
from .measures import (
    FiniteMeasure,
    caratheodory_check,
    finite_oracle,
    inner_measure,
    kolmogorov_measure,
    lebesgue_measure,
    outer_measure,
)
from .dsl import evaluate, parse_event, render

__version__ = "0.1.0"

__all__ = [
    "DSLError",
    "DSLSemanticError",
    "DSLSyntaxError",
    "EmptyConditionError",
    "InexactDivisionError",
    "ModelMismatchError",
    "NumerosityError",
    "PreconditionError",
    "SpecFileError",
    "UnsupportedOperationError",
    "ValidationError",
    "CoinEvent",
    "CoinPoint",
    "FiniteEvent",
    "FiniteSpace",
    "IntervalEvent",
    "complement",
    "contains",
    "difference",
    "intersect",
    "is_equal",
    "is_subset",
    "normalize",
    "union",
    "validate",
    "OMEGA",
    "ONE",
    "ZERO",
    "Kind",
    "NAValue",
    "classify",
    "compare",
    "div",
    "standard_part",
    "NumerosityContext",
    "check_strict_monotonicity",
    "coin_context",
    "conditional",
    "finite_context",
    "interval_context",
    "nbeta",
    "numerosity",
    "probability",
    "FiniteMeasure",
    "caratheodory_check",
    "finite_oracle",
    "inner_measure",
    "kolmogorov_measure",
    "lebesgue_measure",
    "outer_measure",
    "evaluate",
    "parse_event",
    "render",
]
