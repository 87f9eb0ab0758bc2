"""Real-valued measures on represented events.

Values are exact: a :class:`~fractions.Fraction` or ``math.inf``.  On the coin
and interval models every represented event is measurable, so outer and
classical measures are computed structurally.  Finite spaces carry an explicit
additive measure on a declared subalgebra (:class:`FiniteMeasure`); there the
outer measure, the numerosity-based inner measure and the Caratheodory family
are computed by exhaustive enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import ModelMismatchError, PreconditionError, SpecFileError, ValidationError
from .events import CoinEvent, Event, FiniteEvent, FiniteSpace, IntervalEvent, difference, intersect
from .numerosity import NumerosityContext, coin_context, finite_context, interval_context, nbeta

MeasureValue = Union[Fraction, float]
INF = math.inf

DEFAULT_SIZE_BOUND = 12

__all__ = [
    "MeasureValue",
    "INF",
    "kolmogorov_measure",
    "lebesgue_measure",
    "FiniteMeasure",
    "outer_measure",
    "inner_measure",
    "CaratheodoryVerdict",
    "caratheodory_check",
    "OracleCheck",
    "OracleReport",
    "finite_oracle",
]


def kolmogorov_measure(e: CoinEvent) -> Fraction:
    """Fair-coin measure: each atom over ``k`` indices weighs ``2**-k``; points weigh nothing."""
    if not isinstance(e, CoinEvent):
        raise ModelMismatchError("kolmogorov_measure expects a coin event")
    return Fraction(len(e.atoms), 2 ** len(e.indices))


def lebesgue_measure(e: IntervalEvent) -> Fraction:
    if not isinstance(e, IntervalEvent):
        raise ModelMismatchError("lebesgue_measure expects an interval event")
    return e.length()


class FiniteMeasure:
    """Additive measure on the subalgebra of a finite space generated by a partition.

    ``atoms`` partition the universe; ``weights`` are their (non-negative,
    rational) measures.  Algebra members are unions of atoms.
    """

    def __init__(self, space: FiniteSpace, atoms: Sequence[Iterable[Hashable]], weights: Sequence):
        self.space = space
        self.atoms: Tuple[frozenset, ...] = tuple(frozenset(a) for a in atoms)
        self.weights: Tuple[Fraction, ...] = tuple(Fraction(w) for w in weights)
        if len(self.atoms) != len(self.weights):
            raise ValidationError("one weight per atom is required")
        covered = [lab for a in self.atoms for lab in a]
        if sorted(map(repr, covered)) != sorted(map(repr, space.labels)) or any(not a for a in self.atoms):
            raise ValidationError("atoms must partition the universe into nonempty blocks")
        if any(w < 0 for w in self.weights):
            raise ValidationError("measures must be non-negative")
        index = {lab: k for k, lab in enumerate(space.labels)}
        self.atom_masks: Tuple[int, ...] = tuple(sum(1 << index[lab] for lab in a) for a in self.atoms)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_generators(
        cls,
        space: FiniteSpace,
        generators: Iterable[Iterable[Hashable]],
        mu: Mapping[frozenset, object],
    ) -> "FiniteMeasure":
        """Algebra generated by ``generators``; atom weights solved from the ``mu`` assignments.

        Every set in ``mu`` must belong to the generated algebra and together
        they must determine each atom's weight uniquely.
        """
        gens = [frozenset(g) for g in generators]
        for g in gens:
            unknown = g - set(space.labels)
            if unknown:
                raise SpecFileError(f"generator mentions unknown labels {sorted(map(str, unknown))}")
        blocks: Dict[tuple, list] = {}
        for lab in space.labels:
            blocks.setdefault(tuple(lab in g for g in gens), []).append(lab)
        atoms = [frozenset(b) for b in blocks.values()]
        weights = _solve_weights(space, atoms, {frozenset(k): Fraction(v) for k, v in mu.items()})
        return cls(space, atoms, weights)

    @classmethod
    def counting(cls, space: FiniteSpace) -> "FiniteMeasure":
        return cls(space, [[lab] for lab in space.labels], [1] * len(space))

    # -- queries ------------------------------------------------------------

    def _mask(self, x) -> int:
        if isinstance(x, int):
            return x
        if isinstance(x, FiniteEvent):
            if x.space != self.space:
                raise ModelMismatchError("event belongs to a different finite space")
            return self.space.mask(x)
        return self.space.mask(self.space.event(x))

    def hull(self, x) -> int:
        """Mask of the smallest algebra member containing ``x``."""
        m = self._mask(x)
        return sum(a for a in self.atom_masks if a & m)

    def is_member(self, x) -> bool:
        m = self._mask(x)
        return all((a & m) in (0, a) for a in self.atom_masks)

    def members(self) -> List[int]:
        out = [0]
        for a in self.atom_masks:
            out += [m | a for m in out]
        return sorted(out)

    def mu(self, x) -> Fraction:
        m = self._mask(x)
        if not self.is_member(m):
            raise PreconditionError("set is not a member of the declared algebra")
        return sum((w for a, w in zip(self.atom_masks, self.weights) if a & m), Fraction(0))

    def outer(self, x) -> Fraction:
        """Infimum of ``sum(mu(A_n))`` over algebra covers of ``x``.

        The union of any cover is a member containing ``x``, hence contains the
        hull, and ``mu`` is monotone and subadditive; so the hull is optimal.
        """
        m = self._mask(x)
        return sum((w for a, w in zip(self.atom_masks, self.weights) if a & m), Fraction(0))

    @property
    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    @property
    def beta(self) -> Optional[Fraction]:
        """``|Omega| / mu(Omega)``, the measure unit for counting numerosity; None if trivial."""
        if self.total == 0:
            return None
        return Fraction(len(self.space), 1) / self.total

    @property
    def numerosity_compatible(self) -> bool:
        """True iff ``mu`` is proportional to cardinality on the algebra.

        Cardinality is the only elementary numerosity of a finite set, so
        this is exactly when ``|X| / beta`` agrees with ``mu`` on the algebra.
        """
        if self.beta is None:
            return False
        return all(w * self.beta == len(a) for a, w in zip(self.atoms, self.weights))

    def context(self) -> NumerosityContext:
        if self.beta is None:
            raise PreconditionError("the measure is trivial; no positive measure unit exists")
        return finite_context(self.space, self.beta)

    def inner(self, x) -> Fraction:
        m = self._mask(x)
        return nbeta(self.context(), self.space.from_mask(m))


def _solve_weights(space, atoms, mu) -> List[Fraction]:
    import sympy

    rows, rhs = [], []
    for s, v in mu.items():
        unknown = s - set(space.labels)
        if unknown:
            raise SpecFileError(f"mu assignment mentions unknown labels {sorted(map(str, unknown))}")
        row = []
        for a in atoms:
            if a <= s:
                row.append(1)
            elif a & s:
                raise SpecFileError(
                    f"mu is assigned to {{{' '.join(sorted(map(str, s)))}}}, which is not in the algebra"
                )
            else:
                row.append(0)
        rows.append(row)
        rhs.append(sympy.Rational(v.numerator, v.denominator))
    if not rows:
        raise SpecFileError("no mu values given")
    try:
        sol, params = sympy.Matrix(rows).gauss_jordan_solve(sympy.Matrix(rhs))
    except ValueError:
        raise SpecFileError("mu assignments are inconsistent (not additive)") from None
    if params.shape[0]:
        raise SpecFileError("mu assignments do not determine the measure of every atom")
    weights = [Fraction(int(x.p), int(x.q)) for x in sol]
    if any(w < 0 for w in weights):
        raise SpecFileError("mu assignments force a negative atom measure")
    return weights


# -- model-generic entry points ---------------------------------------------------


def outer_measure(e: Event, measure: Optional[FiniteMeasure] = None) -> MeasureValue:
    if isinstance(e, CoinEvent):
        return kolmogorov_measure(e)
    if isinstance(e, IntervalEvent):
        return lebesgue_measure(e)
    if isinstance(e, FiniteEvent):
        if measure is None:
            raise PreconditionError("finite-model outer measure needs a FiniteMeasure")
        return measure.outer(e)
    raise ValidationError(f"not an event: {e!r}")


def inner_measure(
    ctx: Optional[NumerosityContext], e: Event, measure: Optional[FiniteMeasure] = None
) -> MeasureValue:
    """The numerosity-based inner measure ``st(n(E) / beta)``.

    For coin and interval events ``ctx`` defaults to the model's standard
    context.  Finite events need ``measure``; its ``beta`` is used.
    """
    if isinstance(e, FiniteEvent):
        if measure is None:
            raise PreconditionError("finite-model inner measure needs a FiniteMeasure")
        return measure.inner(e)
    if ctx is None:
        ctx = coin_context() if isinstance(e, CoinEvent) else interval_context()
    return nbeta(ctx, e)


@dataclass
class CaratheodoryVerdict:
    holds: bool
    failures: List[Tuple[object, MeasureValue, MeasureValue, MeasureValue]] = field(default_factory=list)

    def __bool__(self):
        return self.holds


def caratheodory_check(
    measure: Callable[[Event], MeasureValue], x: Event, witnesses: Iterable[Event]
) -> CaratheodoryVerdict:
    """Test ``M(Y) == M(Y & X) + M(Y - X)`` for every witness ``Y``.

    Each failure is recorded as ``(Y, M(Y), M(Y & X), M(Y - X))``.
    """
    failures = []
    for y in witnesses:
        total, inside, outside = measure(y), measure(intersect(y, x)), measure(difference(y, x))
        if total != inside + outside:
            failures.append((y, total, inside, outside))
    return CaratheodoryVerdict(not failures, failures)


# -- exhaustive oracle -------------------------------------------------------------


@dataclass
class OracleCheck:
    name: str
    passed: Optional[bool]  # None: not applicable or informational
    detail: str = ""
    info: bool = False


@dataclass
class OracleReport:
    size: int
    atoms: int
    checks: List[OracleCheck]
    caratheodory: List[int]
    strict_inner: List[int]
    measure: FiniteMeasure

    @property
    def passed(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def caratheodory_events(self) -> List[FiniteEvent]:
        return [self.measure.space.from_mask(m) for m in self.caratheodory]


def _scaled(values: Sequence[Fraction]):
    scale = math.lcm(*(v.denominator for v in values)) if values else 1
    ints = [int(v * scale) for v in values]
    dtype = np.int64 if sum(abs(i) for i in ints) < 2**40 else object
    return scale, np.array(ints, dtype=dtype), dtype


def finite_oracle(measure: FiniteMeasure, bound: int = DEFAULT_SIZE_BOUND) -> OracleReport:
    """Enumerate all subsets of the space and verify the measure-theoretic identities.

    Checks additivity and monotonicity of ``mu`` on the algebra, that the
    outer measure extends ``mu`` and is monotone and subadditive, the inner
    measure properties (when the measure admits a counting numerosity), and
    that the Caratheodory family of the outer measure contains the algebra
    and is closed under complement and union.
    """
    n = len(measure.space)
    if n > bound:
        raise PreconditionError(f"finite oracle is limited to {bound} points, got {n}")
    full = (1 << n) - 1
    masks = np.arange(1 << n, dtype=np.int64)
    scale, w, dtype = _scaled(list(measure.weights))
    outer = np.zeros(1 << n, dtype=dtype)
    member = np.ones(1 << n, dtype=bool)
    for a, wa in zip(measure.atom_masks, w):
        hit = masks & a
        outer = outer + np.where(hit != 0, wa, 0).astype(dtype)
        member &= (hit == 0) | (hit == a)
    members = np.flatnonzero(member)
    checks: List[OracleCheck] = []

    # mu on the algebra, summed over the atoms each member contains (independent of the hull)
    mu = np.zeros(1 << n, dtype=dtype)
    for a, wa in zip(measure.atom_masks, w):
        mu = mu + np.where(masks & a == a, wa, 0).astype(dtype)

    ok = True
    for a in members:
        others = members[(members & a) == 0]
        ok &= bool(np.all(mu[a | others] == mu[a] + mu[others]))
    checks.append(OracleCheck("mu additive on algebra", ok, f"{len(members)} members"))
    ok = True
    for a in members:
        supersets = members[(members & a) == a]
        ok &= bool(np.all(mu[a] <= mu[supersets]))
    checks.append(OracleCheck("mu monotone on algebra", ok))
    checks.append(OracleCheck("outer extends mu", bool(np.all(outer[members] == mu[members]))))

    ok = True
    for k in range(n):
        lower = masks[(masks >> k & 1) == 0]
        ok &= bool(np.all(outer[lower] <= outer[lower | (1 << k)]))
    checks.append(OracleCheck("outer monotone", ok))
    ok = all(bool(np.all(outer[x | masks] <= outer[x] + outer)) for x in range(1 << n))
    checks.append(OracleCheck("outer subadditive", ok))

    carath = np.array(
        [bool(np.all(outer[masks & x] + outer[masks & (full ^ x)] == outer)) for x in range(1 << n)]
    )
    c_masks = np.flatnonzero(carath)
    checks.append(OracleCheck("caratheodory contains algebra", bool(np.all(carath[members]))))
    checks.append(OracleCheck("caratheodory closed under complement", bool(np.all(carath[full ^ c_masks]))))
    checks.append(
        OracleCheck(
            "caratheodory closed under union",
            all(bool(np.all(carath[c | c_masks])) for c in c_masks),
            f"{len(c_masks)} measurable sets",
        )
    )

    strict: List[int] = []
    if measure.beta is None:
        for name in ("inner additive", "inner agrees on algebra", "inner <= outer"):
            checks.append(OracleCheck(name, None, "trivial measure: no positive measure unit"))
    elif not measure.numerosity_compatible:
        for name in ("inner additive", "inner agrees on algebra", "inner <= outer"):
            checks.append(
                OracleCheck(name, None, "mu is not proportional to cardinality on the atoms")
            )
    else:
        # n * scale * inner(X) is an integer; compare against n * scale * outer(X)
        inner_n = np.array(
            [int(measure.inner(x) * scale * n) for x in range(1 << n)], dtype=dtype
        )
        outer_n = outer * n
        ok = True
        for x in range(1 << n):
            others = masks[(masks & x) == 0]
            ok &= bool(np.all(inner_n[x | others] == inner_n[x] + inner_n[others]))
        checks.append(OracleCheck("inner additive", ok))
        checks.append(OracleCheck("inner agrees on algebra", bool(np.all(inner_n[members] == outer_n[members]))))
        checks.append(OracleCheck("inner <= outer", bool(np.all(inner_n <= outer_n))))
        strict = np.flatnonzero(inner_n < outer_n).tolist()
        null_inner = inner_n == 0
        null_outer = outer_n == 0
        checks.append(
            OracleCheck(
                "null sets agree (inner = 0 iff outer = 0)",
                None,
                "holds" if bool(np.all(null_inner == null_outer)) else "fails",
                info=True,
            )
        )
    return OracleReport(n, len(measure.atoms), checks, c_masks.tolist(), strict, measure)
