"""Reader for finite-model spec documents.

Example::

    # two halves
    universe: a b c d
    gen: a b
    mu: a b = 1/2
    mu: c d = 1/2

``universe`` must appear exactly once, before any other line.  Each ``gen``
line adds a generator of the algebra; each ``mu`` line fixes the measure of
an algebra member.  Labels are names made of letters, digits and ``_``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Union

from .errors import NumerosityError, SpecFileError
from .events import FiniteSpace
from .measures import FiniteMeasure

_LABEL = re.compile(r"[A-Za-z0-9_]+")
_RATIONAL = re.compile(r"\d+(?:/[1-9]\d*)?")


def _labels(text: str, lineno: int):
    labels = text.split()
    for lab in labels:
        if not _LABEL.fullmatch(lab):
            raise SpecFileError(f"invalid label {lab!r}", lineno)
    return labels


def parse_spec(text: str) -> FiniteMeasure:
    space = None
    gens, mu = [], {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise SpecFileError(f"expected 'key: value', got {line!r}", lineno)
        if key == "universe":
            if space is not None:
                raise SpecFileError("universe declared twice", lineno)
            labels = _labels(rest, lineno)
            if not labels:
                raise SpecFileError("universe must not be empty", lineno)
            if len(set(labels)) != len(labels):
                raise SpecFileError("universe labels must be distinct", lineno)
            space = FiniteSpace(tuple(labels))
            continue
        if space is None:
            raise SpecFileError("'universe:' must come first", lineno)
        if key == "gen":
            members = set(_labels(rest, lineno))
            _check_known(space, members, lineno)
            gens.append(members)
        elif key == "mu":
            lhs, eq, value = rest.partition("=")
            if not eq:
                raise SpecFileError("mu line needs '= value'", lineno)
            members = frozenset(_labels(lhs, lineno))
            _check_known(space, members, lineno)
            value = value.strip()
            if not _RATIONAL.fullmatch(value):
                raise SpecFileError(f"mu value must be a non-negative rational p or p/q, got {value!r}", lineno)
            if members in mu and mu[members] != Fraction(value):
                raise SpecFileError("conflicting mu values for the same set", lineno)
            mu[members] = Fraction(value)
        else:
            raise SpecFileError(f"unknown key {key!r}", lineno)
    if space is None:
        raise SpecFileError("missing 'universe:' line")
    try:
        return FiniteMeasure.from_generators(space, gens, mu)
    except SpecFileError:
        raise
    except NumerosityError as exc:
        raise SpecFileError(str(exc)) from None


def _check_known(space, members, lineno):
    unknown = set(members) - set(space.labels)
    if unknown:
        raise SpecFileError(f"labels not in the universe: {' '.join(sorted(unknown))}", lineno)


def load_spec(path: Union[str, Path]) -> FiniteMeasure:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecFileError(f"cannot read {path}: {exc.strerror}") from None
    return parse_spec(text)


def render_spec(measure: FiniteMeasure) -> str:
    """Spec text that parses back to an equivalent measure (atoms as generators)."""
    lines = ["universe: " + " ".join(map(str, measure.space.labels))]
    for atom in measure.atoms[:-1]:
        lines.append("gen: " + " ".join(str(l) for l in measure.space.labels if l in atom))
    for atom, w in zip(measure.atoms, measure.weights):
        lines.append("mu: " + " ".join(str(l) for l in measure.space.labels if l in atom) + f" = {w}")
    return "\n".join(lines) + "\n"
