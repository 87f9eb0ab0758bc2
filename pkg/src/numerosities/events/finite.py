"""Explicit finite spaces, used as the brute-force oracle model."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Hashable, Iterable, Tuple

from ..errors import ModelMismatchError, ValidationError


@dataclass(frozen=True)
class FiniteSpace:
    labels: Tuple[Hashable, ...]

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValidationError("finite space labels must be distinct")

    def __len__(self):
        return len(self.labels)

    def event(self, members: Iterable[Hashable] = ()) -> "FiniteEvent":
        members = frozenset(members)
        unknown = members - set(self.labels)
        if unknown:
            raise ValidationError(f"labels not in the universe: {sorted(map(str, unknown))}")
        return FiniteEvent(self, members)

    def omega(self) -> "FiniteEvent":
        return FiniteEvent(self, frozenset(self.labels))

    def empty(self) -> "FiniteEvent":
        return FiniteEvent(self, frozenset())

    def from_mask(self, mask: int) -> "FiniteEvent":
        return FiniteEvent(
            self, frozenset(lab for k, lab in enumerate(self.labels) if mask >> k & 1)
        )

    def mask(self, e: "FiniteEvent") -> int:
        return sum(1 << k for k, lab in enumerate(self.labels) if lab in e.members)


@dataclass(frozen=True)
class FiniteEvent:
    space: FiniteSpace
    members: FrozenSet[Hashable]

    model = "finite"

    def __contains__(self, x) -> bool:
        return x in self.members

    def __len__(self):
        return len(self.members)

    def is_empty(self) -> bool:
        return not self.members

    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __sub__(self, other):
        return difference(self, other)

    def __invert__(self):
        return complement(self)


def _same_space(a: FiniteEvent, b: FiniteEvent) -> FiniteSpace:
    if a.space != b.space:
        raise ModelMismatchError("events live in different finite spaces")
    return a.space


def normalize(e: FiniteEvent) -> FiniteEvent:
    return e.space.event(e.members)


def union(a: FiniteEvent, b: FiniteEvent) -> FiniteEvent:
    return FiniteEvent(_same_space(a, b), a.members | b.members)


def intersect(a: FiniteEvent, b: FiniteEvent) -> FiniteEvent:
    return FiniteEvent(_same_space(a, b), a.members & b.members)


def difference(a: FiniteEvent, b: FiniteEvent) -> FiniteEvent:
    return FiniteEvent(_same_space(a, b), a.members - b.members)


def complement(e: FiniteEvent) -> FiniteEvent:
    return FiniteEvent(e.space, frozenset(e.space.labels) - e.members)


def validate(e: FiniteEvent) -> None:
    if not e.members <= frozenset(e.space.labels):
        raise ValidationError("members must be a subset of the universe")
