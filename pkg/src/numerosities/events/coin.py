"""Events of the coin-toss space {H,T}^N.

An event is a finite union of atoms over a finite index set (the cylinder
algebra), adjusted by finitely many added and removed sample points.  Sample
points are eventually-constant sequences.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, FrozenSet, Iterable, Tuple

from ..errors import ValidationError

SYMBOLS = ("H", "T")
_FLIP = {"H": "T", "T": "H"}


@dataclass(frozen=True, order=True)
class CoinPoint:
    """Sequence equal to ``prefix`` on indices 1..len(prefix) and to ``tail`` afterwards."""

    prefix: str
    tail: str

    def __post_init__(self):
        if self.tail not in _FLIP:
            raise ValidationError(f"tail must be 'H' or 'T', got {self.tail!r}")
        if any(ch not in _FLIP for ch in self.prefix):
            raise ValidationError(f"prefix must be a word over H/T, got {self.prefix!r}")
        trimmed = self.prefix.rstrip(self.tail)
        if trimmed != self.prefix:
            object.__setattr__(self, "prefix", trimmed)

    def __getitem__(self, i: int) -> str:
        if i < 1:
            raise IndexError("coin indices start at 1")
        return self.prefix[i - 1] if i <= len(self.prefix) else self.tail

    def __str__(self):
        return f"{self.prefix}({self.tail})"


@dataclass(frozen=True)
class CoinEvent:
    """Canonical coin event; build instances with :func:`make_coin_event` or the helpers.

    ``atoms`` are words over H/T aligned with ``indices``.  The represented
    set is ``(base | plus) - minus`` where ``base`` is the union of the atoms.
    """

    indices: Tuple[int, ...]
    atoms: FrozenSet[str]
    plus: FrozenSet[CoinPoint] = frozenset()
    minus: FrozenSet[CoinPoint] = frozenset()

    model = "coin"

    def in_base(self, p: CoinPoint) -> bool:
        return "".join(p[i] for i in self.indices) in self.atoms

    def __contains__(self, p: CoinPoint) -> bool:
        if p in self.plus:
            return True
        if p in self.minus:
            return False
        return self.in_base(p)

    def is_empty(self) -> bool:
        return not self.atoms and not self.plus

    @property
    def codimension(self) -> int:
        return len(self.indices)

    def max_index(self) -> int:
        idx = list(self.indices)
        for p in itertools.chain(self.plus, self.minus):
            idx.append(len(p.prefix))
        return max(idx, default=0)

    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __sub__(self, other):
        return difference(self, other)

    def __invert__(self):
        return complement(self)


def _all_words(n: int):
    return ("".join(w) for w in itertools.product(SYMBOLS, repeat=n))


def _eliminate(indices: Tuple[int, ...], atoms: FrozenSet[str]):
    """Drop every index on which the union of atoms does not depend."""
    if not atoms:
        return (), frozenset()
    indices, atoms = list(indices), set(atoms)
    pos = len(indices) - 1
    while pos >= 0:
        if all(a[:pos] + _FLIP[a[pos]] + a[pos + 1:] in atoms for a in atoms):
            atoms = {a[:pos] + a[pos + 1:] for a in atoms}
            del indices[pos]
        pos -= 1
    return tuple(indices), frozenset(atoms)


def make_coin_event(
    indices: Iterable[int],
    atoms: Iterable[str],
    plus: Iterable[CoinPoint] = (),
    minus: Iterable[CoinPoint] = (),
) -> CoinEvent:
    """Validate and canonicalize a raw description ``(base | plus) - minus``."""
    indices = tuple(indices)
    if any(not isinstance(i, int) or isinstance(i, bool) or i < 1 for i in indices):
        raise ValidationError(f"coin indices must be positive integers: {indices!r}")
    if len(set(indices)) != len(indices):
        raise ValidationError(f"repeated coin index in {indices!r}")
    atoms = frozenset(atoms)
    for a in atoms:
        if len(a) != len(indices) or any(ch not in _FLIP for ch in a):
            raise ValidationError(f"atom {a!r} does not match indices {indices!r}")
    order = sorted(range(len(indices)), key=indices.__getitem__)
    if order != list(range(len(indices))):
        indices = tuple(indices[k] for k in order)
        atoms = frozenset("".join(a[k] for k in order) for a in atoms)
    indices, atoms = _eliminate(indices, atoms)
    base = CoinEvent(indices, atoms)
    plus, minus = frozenset(plus), frozenset(minus)
    for p in itertools.chain(plus, minus):
        if not isinstance(p, CoinPoint):
            raise ValidationError(f"expected CoinPoint, got {p!r}")
    new_plus = frozenset(p for p in plus if p not in minus and not base.in_base(p))
    new_minus = frozenset(p for p in minus if base.in_base(p))
    return CoinEvent(indices, atoms, new_plus, new_minus)


def normalize(e: CoinEvent) -> CoinEvent:
    return make_coin_event(e.indices, e.atoms, e.plus, e.minus)


def omega() -> CoinEvent:
    return CoinEvent((), frozenset([""]))


def empty() -> CoinEvent:
    return CoinEvent((), frozenset())


def cylinder(assignment) -> CoinEvent:
    """Cylinder set fixing ``assignment`` (a mapping or pairs ``index -> 'H'|'T'``)."""
    pairs = list(assignment.items() if isinstance(assignment, dict) else assignment)
    for i, t in pairs:
        if isinstance(i, bool) or not isinstance(i, int) or i < 1:
            raise ValidationError(f"coin indices must be positive integers, got {i!r}")
        if t not in _FLIP:
            raise ValidationError(f"cylinder value must be 'H' or 'T', got {t!r}")
    pairs.sort()
    indices = tuple(i for i, _ in pairs)
    if len(set(indices)) != len(indices):
        raise ValidationError("repeated index in cylinder")
    return CoinEvent(indices, frozenset(("".join(t for _, t in pairs),)))


def points(pts: Iterable[CoinPoint]) -> CoinEvent:
    return make_coin_event((), (), pts, ())


def refine(e: CoinEvent, indices: Iterable[int]) -> Tuple[Tuple[int, ...], FrozenSet[str]]:
    """Atoms of ``e``'s base re-expressed over the sorted superset ``indices``.

    The result is deliberately not canonical.
    """
    target = tuple(sorted(set(indices)))
    if not set(e.indices) <= set(target):
        raise ValueError("refinement target must contain the event's indices")
    slots = [target.index(i) for i in e.indices]
    free = [k for k in range(len(target)) if target[k] not in e.indices]
    out = set()
    for a in e.atoms:
        word = [""] * len(target)
        for k, ch in zip(slots, a):
            word[k] = ch
        for fill in itertools.product(SYMBOLS, repeat=len(free)):
            for k, ch in zip(free, fill):
                word[k] = ch
            out.add("".join(word))
    return target, frozenset(out)


def _combine(a: CoinEvent, b: CoinEvent, op: Callable[[bool, bool], bool]) -> CoinEvent:
    target = tuple(sorted(set(a.indices) | set(b.indices)))
    _, atoms_a = refine(a, target)
    _, atoms_b = refine(b, target)
    universe = atoms_a | atoms_b
    atoms = {w for w in universe if op(w in atoms_a, w in atoms_b)}
    if op(False, False):
        atoms |= {w for w in _all_words(len(target)) if w not in universe}
    base = make_coin_event(target, atoms)
    plus, minus = set(), set()
    for p in a.plus | a.minus | b.plus | b.minus:
        want = op(p in a, p in b)
        if want != base.in_base(p):
            (plus if want else minus).add(p)
    return CoinEvent(base.indices, base.atoms, frozenset(plus), frozenset(minus))


def union(a: CoinEvent, b: CoinEvent) -> CoinEvent:
    return _combine(a, b, lambda x, y: x or y)


def intersect(a: CoinEvent, b: CoinEvent) -> CoinEvent:
    return _combine(a, b, lambda x, y: x and y)


def difference(a: CoinEvent, b: CoinEvent) -> CoinEvent:
    return _combine(a, b, lambda x, y: x and not y)


def complement(e: CoinEvent) -> CoinEvent:
    atoms = frozenset(w for w in _all_words(len(e.indices)) if w not in e.atoms)
    if not atoms:
        return CoinEvent((), frozenset(), e.minus, frozenset())
    indices, atoms = _eliminate(e.indices, atoms)
    return CoinEvent(indices, atoms, e.minus, e.plus)


def validate(e: CoinEvent) -> None:
    """Raise :class:`ValidationError` unless ``e`` satisfies every canonical-form invariant."""
    if list(e.indices) != sorted(set(e.indices)) or any(i < 1 for i in e.indices):
        raise ValidationError("indices must be strictly increasing positive integers")
    if any(len(a) != len(e.indices) for a in e.atoms):
        raise ValidationError("atom length mismatch")
    if _eliminate(e.indices, e.atoms) != (e.indices, e.atoms):
        raise ValidationError("index set is not minimal")
    if any(e.in_base(p) for p in e.plus):
        raise ValidationError("plus point lies in the base set")
    if any(not e.in_base(p) for p in e.minus):
        raise ValidationError("minus point lies outside the base set")
    if e.plus & e.minus:
        raise ValidationError("plus and minus overlap")
