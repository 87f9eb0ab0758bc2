"""Exact arithmetic in the ordered field generated by the rationals and an infinite unit.

Values are finite sums ``c_1 w^e_1 + ... + c_k w^e_k`` with rational
coefficients and rational exponents, where ``w`` is a positive infinite
number.  The order is the one induced by ``w``: a value is positive when the
coefficient of its largest exponent is positive.  Everything is exact; no
floating point is used for values.
"""

from __future__ import annotations

import enum
import math
import re
from fractions import Fraction
from typing import Mapping, Tuple, Union

from .errors import InexactDivisionError, ValidationError

__all__ = [
    "NAValue",
    "Kind",
    "OMEGA",
    "ZERO",
    "ONE",
    "DEFAULT_ORDER",
    "ExtendedReal",
    "add",
    "mul",
    "div",
    "compare",
    "standard_part",
    "quotient_standard_part",
    "classify",
    "infinitely_close",
]

DEFAULT_ORDER = 16

Rational = Union[int, Fraction]
# A Fraction, or one of the floats math.inf / -math.inf.
ExtendedReal = Union[Fraction, float]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"not a rational literal: {x!r}") from exc
    raise ValidationError(f"expected an exact rational, got {type(x).__name__}")


class Kind(enum.Enum):
    ZERO = "zero"
    INFINITESIMAL = "infinitesimal"
    FINITE = "finite-noninfinitesimal"
    INFINITE = "infinite"


class NAValue:
    """Immutable element of the field, stored as terms sorted by descending exponent.

    Construct from a mapping ``{exponent: coefficient}``, from an int/Fraction,
    or with :meth:`monomial`.  Arithmetic operators accept ints and Fractions
    on either side.  ``/`` returns the exact quotient and raises
    :class:`InexactDivisionError` otherwise; use :func:`div` to get a
    truncated series with an exactness flag.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping, Rational, "NAValue", None] = None):
        if terms is None:
            items: Tuple[Tuple[Fraction, Fraction], ...] = ()
        elif isinstance(terms, NAValue):
            items = terms._terms
        elif isinstance(terms, Mapping):
            collected: dict = {}
            for e, c in terms.items():
                e, c = _frac(e), _frac(c)
                collected[e] = collected.get(e, 0) + c
            items = tuple(
                (e, c) for e, c in sorted(collected.items(), reverse=True) if c
            )
        else:
            c = _frac(terms)
            items = ((Fraction(0), c),) if c else ()
        self._terms = items
        self._hash = None

    @classmethod
    def _raw(cls, items) -> "NAValue":
        # items must already be canonical
        obj = cls.__new__(cls)
        obj._terms = items
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coefficient: Rational, exponent: Rational = 0) -> "NAValue":
        c = _frac(coefficient)
        if not c:
            return ZERO
        return cls._raw(((_frac(exponent), c),))

    @classmethod
    def parse(cls, text: str) -> "NAValue":
        """Inverse of ``str()``; also accepts a bare ``w`` / ``-w`` term."""
        text = text.strip()
        if text == "0":
            return ZERO
        terms: dict = {}
        for part in text.split(" + "):
            m = _TERM_RE.fullmatch(part.strip())
            if m is None:
                raise ValidationError(f"cannot parse term {part!r} in {text!r}")
            coef, power, exp = m.group("coef"), m.group("w"), m.group("exp")
            if power is None:
                if coef is None or coef == "-":
                    raise ValidationError(f"empty term in {text!r}")
                e, c = Fraction(0), _frac(coef)
            else:
                e = _frac(exp) if exp is not None else Fraction(1)
                if coef is None or coef in ("", "-"):
                    c = Fraction(-1 if coef == "-" else 1)
                else:
                    c = _frac(coef.rstrip("*"))
            if e in terms:
                raise ValidationError(f"repeated exponent {e} in {text!r}")
            terms[e] = c
        return cls(terms)

    @property
    def terms(self) -> Tuple[Tuple[Fraction, Fraction], ...]:
        """``(exponent, coefficient)`` pairs in strictly descending exponent order."""
        return self._terms

    def as_dict(self) -> dict:
        return dict(self._terms)

    def coefficient(self, exponent: Rational = 0) -> Fraction:
        return dict(self._terms).get(_frac(exponent), Fraction(0))

    @property
    def leading_exponent(self):
        """Largest exponent, or ``None`` for zero."""
        return self._terms[0][0] if self._terms else None

    @property
    def leading_coefficient(self) -> Fraction:
        return self._terms[0][1] if self._terms else Fraction(0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_rational(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not self._terms[0][0])

    def sign(self) -> int:
        if not self._terms:
            return 0
        return 1 if self._terms[0][1] > 0 else -1

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational number")
        return self.coefficient(0)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        return NAValue._raw(_merge(self._terms, other._terms))

    __radd__ = __add__

    def __neg__(self):
        return NAValue._raw(tuple((e, -c) for e, c in self._terms))

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        if len(other._terms) == 1:
            oe, oc = other._terms[0]
            if not oe:
                return NAValue._raw(tuple((e, c * oc) for e, c in self._terms))
            return NAValue._raw(tuple((e + oe, c * oc) for e, c in self._terms))
        if len(self._terms) == 1:
            return other * self
        acc: dict = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return NAValue._raw(
            tuple((e, c) for e, c in sorted(acc.items(), reverse=True) if c)
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        q, exact = div(self, other)
        if not exact:
            raise InexactDivisionError(f"({self}) / ({other}) has no finite expansion")
        return q

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return ONE / (self ** -n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- order and identity -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, NAValue):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not self._terms:
                return other == 0
            return len(self._terms) == 1 and not self._terms[0][0] and self._terms[0][1] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            # agrees with hash(Fraction) for rational values
            if self.is_rational():
                self._hash = hash(self.coefficient(0))
            else:
                self._hash = hash(self._terms)
        return self._hash

    def _cmp(self, other) -> int:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign()

    def __lt__(self, other):
        s = self._cmp(other)
        return s if s is NotImplemented else s < 0

    def __le__(self, other):
        s = self._cmp(other)
        return s if s is NotImplemented else s <= 0

    def __gt__(self, other):
        s = self._cmp(other)
        return s if s is NotImplemented else s > 0

    def __ge__(self, other):
        s = self._cmp(other)
        return s if s is NotImplemented else s >= 0

    def __bool__(self):
        return bool(self._terms)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(_render_term(e, c) for e, c in self._terms)

    def __repr__(self):
        return f"NAValue({str(self)!r})"


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _render_term(e: Fraction, c: Fraction) -> str:
    if e == 0:
        return _fmt(c)
    head = "w" if c == 1 else f"{_fmt(c)}*w"
    return head if e == 1 else f"{head}^{_fmt(e)}"


_RAT = r"-?\d+(?:/\d+)?"
_TERM_RE = re.compile(
    rf"(?P<coef>{_RAT}\*|-|{_RAT}(?=$))?(?P<w>w(?:\^(?P<exp>{_RAT}))?)?"
)


def _merge(a, b):
    """Sum of two canonical term tuples (descending exponents)."""
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        ea, eb = a[i][0], b[j][0]
        if ea == eb:
            c = a[i][1] + b[j][1]
            if c:
                out.append((ea, c))
            i += 1
            j += 1
        elif ea > eb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _coerce(x):
    if isinstance(x, NAValue):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        if not x:
            return ZERO
        return NAValue._raw(((_EXP0, x if type(x) is Fraction else Fraction(x)),))
    return NotImplemented


_EXP0 = Fraction(0)
ZERO = NAValue._raw(())
ONE = NAValue._raw(((Fraction(0), Fraction(1)),))
OMEGA = NAValue._raw(((Fraction(1), Fraction(1)),))


# -- functional interface ---------------------------------------------------


def add(x: NAValue, y: NAValue) -> NAValue:
    return _coerce(x) + _coerce(y)


def mul(x: NAValue, y: NAValue) -> NAValue:
    return _coerce(x) * _coerce(y)


def div(x, y, order: int = DEFAULT_ORDER) -> Tuple[NAValue, bool]:
    """Quotient ``x / y`` as ``(value, exact)``.

    A monomial divisor gives the exact quotient.  Otherwise the quotient is
    expanded by leading-term elimination, which is the geometric series of
    ``1 / (1 + d)`` (``d`` infinitesimal) after factoring out the leading
    monomial of ``y``.  At most ``order`` quotient terms are produced; the
    flag is true iff the remainder vanished within that budget.

    >>> q, exact = div(ONE, ONE - OMEGA ** -1, 3)
    >>> str(q), exact
    ('1 + w^-1 + w^-2', False)
    """
    x, y = _coerce(x), _coerce(y)
    if x is NotImplemented or y is NotImplemented:
        raise TypeError("div expects NAValue, int or Fraction operands")
    if not y._terms:
        raise ZeroDivisionError("division by zero in the non-Archimedean field")
    if order < 1:
        raise ValueError("order must be a positive integer")
    lead_e, lead_c = y._terms[0]
    if len(y._terms) == 1:
        if lead_c == 1:
            return NAValue._raw(tuple((e - lead_e, c) for e, c in x._terms)), True
        return NAValue._raw(tuple((e - lead_e, c / lead_c) for e, c in x._terms)), True
    quotient = []
    remainder = x._terms
    tail = y._terms[1:]
    for _ in range(order):
        if not remainder:
            break
        re_, rc = remainder[0]
        qe, qc = re_ - lead_e, rc / lead_c
        quotient.append((qe, qc))
        # the leading terms cancel by construction; subtract q * (rest of y)
        remainder = _merge(remainder[1:], tuple((e + qe, -c * qc) for e, c in tail))
    return NAValue._raw(tuple(quotient)), not remainder


def compare(x, y) -> int:
    """Return -1, 0 or 1 as ``x`` is less than, equal to or greater than ``y``."""
    return (_coerce(x) - _coerce(y)).sign()


def standard_part(x) -> ExtendedReal:
    """The real number infinitely close to ``x``; ``±math.inf`` when ``x`` is infinite."""
    x = _coerce(x)
    if x._terms and x._terms[0][0] > 0:
        return math.inf if x._terms[0][1] > 0 else -math.inf
    return x.coefficient(0)


def quotient_standard_part(x, y) -> ExtendedReal:
    """``standard_part(x / y)`` computed exactly, whether or not the quotient terminates.

    Quotient exponents lie in a discrete subgroup of the rationals, so the
    elimination reaches the infinitesimal terms after finitely many steps.
    """
    x, y = _coerce(x), _coerce(y)
    if not y._terms:
        raise ZeroDivisionError("division by zero in the non-Archimedean field")
    lead_e, lead_c = y._terms[0]
    if not x._terms:
        return Fraction(0)
    if x._terms[0][0] > lead_e:
        return math.inf if (x._terms[0][1] > 0) == (lead_c > 0) else -math.inf
    remainder = x
    while remainder._terms:
        re_, rc = remainder._terms[0]
        qe, qc = re_ - lead_e, rc / lead_c
        if qe < 0:
            return Fraction(0)
        if qe == 0:
            return qc
        remainder = remainder - NAValue._raw(((qe, qc),)) * y
    return Fraction(0)


def classify(x) -> Kind:
    x = _coerce(x)
    if not x._terms:
        return Kind.ZERO
    top = x._terms[0][0]
    if top > 0:
        return Kind.INFINITE
    if top < 0:
        return Kind.INFINITESIMAL
    return Kind.FINITE


def infinitely_close(x, y) -> bool:
    return classify(_coerce(x) - _coerce(y)) in (Kind.ZERO, Kind.INFINITESIMAL)
