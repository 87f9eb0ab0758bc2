"""Textual event language: lexer, recursive-descent parser, AST, elaboration and rendering.

Grammar (one-token lookahead)::

    expr   := term (("|" | "∪") term)*
    term   := diff (("&" | "∩") diff)*
    diff   := factor ("\\" factor)?
    factor := "~" factor | "(" expr ")" | literal

Interval literals are ``[a, b)`` and ``{x, y, ...}`` with rationals written
``p`` or ``p/q``.  Coin literals are ``C(1:H, 3:T)``, point sets such as
``{HTH(T), (H)}`` (prefix, then the constant tail in parentheses), ``Omega``
and ``Empty``.  In a finite space, ``{a, b}`` lists labels.  Whitespace is
insignificant and ``#`` starts a comment running to the end of the line.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import DSLSemanticError, DSLSyntaxError, NumerosityError, UnsupportedOperationError
from .events import (
    CoinEvent,
    CoinPoint,
    Event,
    FiniteEvent,
    FiniteSpace,
    IntervalEvent,
    coin,
    complement,
    difference,
    intersect,
    interval,
    union,
)

__all__ = [
    "Token",
    "tokenize",
    "parse_event",
    "parse_corpus",
    "elaborate",
    "evaluate",
    "render",
    "render_ast",
]

MODELS = ("coin", "interval", "finite")
MAX_DEPTH = 100

# -- lexer ----------------------------------------------------------------------

_PUNCT = {
    "[": "[",
    "(": "(",
    ")": ")",
    "{": "{",
    "}": "}",
    ",": ",",
    ":": ":",
    "/": "/",
    "|": "|",
    "∪": "|",
    "&": "&",
    "∩": "&",
    "\\": "\\",
    "∖": "\\",
    "~": "~",
    "¬": "~",
}

_DESCR = {
    "INT": "integer",
    "WORD": "name",
    "EOF": "end of input",
    "|": "'|'",
    "&": "'&'",
    "\\": "'\\'",
}


@dataclass(frozen=True)
class Token:
    kind: str  # a punctuation key, "INT", "WORD" or "EOF"
    text: str
    line: int
    column: int


def _describe(kind: str) -> str:
    return _DESCR.get(kind, f"'{kind}'")


def tokenize(src: str) -> List[Token]:
    tokens: List[Token] = []
    i, line, col = 0, 1, 1
    n = len(src)
    while i < n:
        ch = src[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if ch.isspace():
            i, col = i + 1, col + 1
            continue
        if ch == "#":
            while i < n and src[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, line, col))
            i, col = i + 1, col + 1
            continue
        if ch == "-" or ch.isascii() and ch.isdigit():
            j = i + 1 if ch == "-" else i
            k = j
            while k < n and src[k].isascii() and src[k].isdigit():
                k += 1
            if k == j:
                raise DSLSyntaxError("'-' must be followed by digits", line, col, source=src)
            if k < n and src[k] in ".eE" and (k + 1 < n and src[k + 1].isascii() and src[k + 1].isdigit()):
                raise DSLSemanticError(
                    "only exact rationals are accepted; write p/q instead of a decimal",
                    line,
                    col,
                    source=src,
                )
            tokens.append(Token("INT", src[i:k], line, start_col))
            col += k - i
            i = k
            continue
        if ch.isascii() and (ch.isalpha() or ch == "_"):
            k = i
            while k < n and src[k].isascii() and (src[k].isalnum() or src[k] == "_"):
                k += 1
            tokens.append(Token("WORD", src[i:k], line, start_col))
            col += k - i
            i = k
            continue
        raise DSLSyntaxError(f"unexpected character {ch!r}", line, col, source=src)
    tokens.append(Token("EOF", "", line, col))
    return tokens


# -- AST ------------------------------------------------------------------------


@dataclass(frozen=True)
class IntervalLit:
    lo: Fraction
    hi: Fraction


@dataclass(frozen=True)
class RationalSet:
    values: Tuple[Fraction, ...]


@dataclass(frozen=True)
class CylinderLit:
    pairs: Tuple[Tuple[int, str], ...]


@dataclass(frozen=True)
class PointSet:
    points: Tuple[CoinPoint, ...]


@dataclass(frozen=True)
class LabelSet:
    labels: Tuple[str, ...]


@dataclass(frozen=True)
class OmegaLit:
    pass


@dataclass(frozen=True)
class EmptyLit:
    pass


@dataclass(frozen=True)
class UnionNode:
    left: object
    right: object


@dataclass(frozen=True)
class IntersectNode:
    left: object
    right: object


@dataclass(frozen=True)
class DifferenceNode:
    left: object
    right: object


@dataclass(frozen=True)
class ComplementNode:
    operand: object


# -- parser ---------------------------------------------------------------------


class _Parser:
    def __init__(self, src: str, model: str):
        if model not in MODELS:
            raise ValueError(f"unknown model {model!r}")
        self.src = src
        self.model = model
        self.tokens = tokenize(src)
        self.pos = 0
        self.depth = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        if t.kind != "EOF":
            self.pos += 1
        return t

    def fail(self, expected, tok: Optional[Token] = None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "EOF" else repr(tok.text)
        raise DSLSyntaxError(
            f"unexpected {found}", tok.line, tok.column, [_describe(e) for e in expected], self.src
        )

    def semantic(self, message, tok: Token):
        raise DSLSemanticError(message, tok.line, tok.column, self.src)

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            self.fail([kind])
        return self.advance()

    def parse(self):
        node = self.expr()
        if self.tok.kind != "EOF":
            self.fail(["|", "&", "EOF"])
        return node

    def expr(self):
        node = self.term()
        while self.tok.kind == "|":
            self.advance()
            node = UnionNode(node, self.term())
        return node

    def term(self):
        node = self.diff()
        while self.tok.kind == "&":
            self.advance()
            node = IntersectNode(node, self.diff())
        return node

    def diff(self):
        node = self.factor()
        if self.tok.kind == "\\":
            self.advance()
            node = DifferenceNode(node, self.factor())
        return node

    def factor(self):
        tok = self.tok
        self.depth += 1
        try:
            if self.depth > MAX_DEPTH:
                raise DSLSyntaxError("expression nested too deeply", tok.line, tok.column, source=self.src)
            return self._factor(tok)
        finally:
            self.depth -= 1

    def _factor(self, tok):
        if tok.kind == "~":
            self.advance()
            if self.model == "interval":
                self.semantic("complement is unbounded on the real line; use '\\'", tok)
            return ComplementNode(self.factor())
        if tok.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        return self.literal()

    def literal(self):
        tok = self.tok
        if tok.kind == "WORD" and tok.text == "Empty":
            self.advance()
            return EmptyLit()
        if tok.kind == "WORD" and tok.text == "Omega":
            self.advance()
            if self.model == "interval":
                self.semantic("the whole real line is not a represented event", tok)
            return OmegaLit()
        if self.model == "interval":
            if tok.kind == "[":
                return self.interval_lit()
            if tok.kind == "{":
                return RationalSet(tuple(self.braced(self.rational)))
            self.fail(["[", "{", "(", "~", "Empty"])
        if self.model == "coin":
            if tok.kind == "WORD" and tok.text == "C":
                return self.cylinder_lit()
            if tok.kind == "{":
                return PointSet(tuple(self.braced(self.point)))
            self.fail(["C", "{", "(", "~", "Omega", "Empty"])
        if tok.kind == "{":
            return LabelSet(tuple(self.braced(self.label)))
        self.fail(["{", "(", "~", "Omega", "Empty"])

    def braced(self, item):
        self.expect("{")
        items = [item()]
        while self.tok.kind == ",":
            self.advance()
            items.append(item())
        self.expect("}")
        return items

    def rational(self) -> Fraction:
        tok = self.expect("INT")
        num = int(tok.text)
        if self.tok.kind == "/":
            self.advance()
            den_tok = self.expect("INT")
            den = int(den_tok.text)
            if den <= 0 or den_tok.text.startswith("-"):
                self.semantic("denominator must be a positive integer", den_tok)
            return Fraction(num, den)
        return Fraction(num)

    def interval_lit(self):
        start = self.expect("[")
        lo = self.rational()
        self.expect(",")
        hi = self.rational()
        self.expect(")")
        if lo >= hi:
            self.semantic(f"interval [{_fmt(lo)}, {_fmt(hi)}) is empty; need a < b", start)
        return IntervalLit(lo, hi)

    def cylinder_lit(self):
        self.advance()
        self.expect("(")
        pairs, seen = [], set()
        while True:
            idx_tok = self.expect("INT")
            idx = int(idx_tok.text)
            if idx < 1:
                self.semantic("coin indices start at 1", idx_tok)
            if idx in seen:
                self.semantic(f"index {idx} appears twice", idx_tok)
            seen.add(idx)
            self.expect(":")
            pairs.append((idx, self.symbol()))
            if self.tok.kind != ",":
                break
            self.advance()
        self.expect(")")
        return CylinderLit(tuple(pairs))

    def symbol(self) -> str:
        tok = self.tok
        if tok.kind != "WORD" or tok.text not in ("H", "T"):
            self.fail(["H", "T"])
        self.advance()
        return tok.text

    def point(self) -> CoinPoint:
        prefix = ""
        tok = self.tok
        if tok.kind == "WORD":
            if set(tok.text) - {"H", "T"}:
                self.semantic(f"point prefix must be a word over H/T, got {tok.text!r}", tok)
            prefix = tok.text
            self.advance()
        elif tok.kind != "(":
            self.fail(["WORD", "("])
        self.expect("(")
        tail = self.symbol()
        self.expect(")")
        return CoinPoint(prefix, tail)

    def label(self) -> str:
        tok = self.tok
        if tok.kind not in ("WORD", "INT"):
            self.fail(["WORD"])
        self.advance()
        return tok.text


def parse_event(src: str, model: str):
    """Parse one expression into an AST; raises :class:`DSLError` subclasses on bad input."""
    return _Parser(src, model).parse()


def parse_corpus(text: str, model: str) -> List[Tuple[int, object]]:
    """Parse a corpus document: one expression per non-blank line, ``#`` comments."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.split("#", 1)[0].strip():
            continue
        try:
            out.append((lineno, parse_event(line, model)))
        except DSLSyntaxError as exc:
            raise DSLSyntaxError(exc.message, lineno, exc.column, source=line) from None
        except DSLSemanticError as exc:
            raise DSLSemanticError(exc.message, lineno, exc.column, source=line) from None
    return out


# -- elaboration ------------------------------------------------------------------


def elaborate(node, model: str, space: Optional[FiniteSpace] = None) -> Event:
    """Turn an AST into a canonical event of ``model``."""
    if model == "finite" and space is None:
        raise DSLSemanticError("the finite model needs a universe")
    return _elab(node, model, space)


def _children(node) -> tuple:
    if isinstance(node, (UnionNode, IntersectNode, DifferenceNode)):
        return (node.left, node.right)
    if isinstance(node, ComplementNode):
        return (node.operand,)
    return ()


def _fold(node, visit):
    """Post-order fold without recursion: ``visit(node, child_results)``.

    Left-associative chains such as ``A | B | ... | Z`` produce trees deeper
    than the interpreter stack, so the walk keeps its own stack.
    """
    stack, results = [(node, False)], []
    while stack:
        current, expanded = stack.pop()
        kids = _children(current)
        if expanded or not kids:
            args = results[len(results) - len(kids):] if kids else []
            del results[len(results) - len(kids):]
            results.append(visit(current, args))
        else:
            stack.append((current, True))
            stack.extend((k, False) for k in reversed(kids))
    return results[0]


def _elab(node, model, space):
    return _fold(node, lambda n, args: _elab_node(n, args, model, space))


def _elab_node(node, args, model, space):
    if isinstance(node, UnionNode):
        return union(*args)
    if isinstance(node, IntersectNode):
        return intersect(*args)
    if isinstance(node, DifferenceNode):
        return difference(*args)
    if isinstance(node, ComplementNode):
        try:
            return complement(args[0])
        except UnsupportedOperationError as exc:
            raise DSLSemanticError(str(exc)) from None
    if isinstance(node, EmptyLit):
        return {"coin": coin.empty, "interval": interval.empty}.get(model, lambda: space.empty())()
    if isinstance(node, OmegaLit):
        if model == "interval":
            raise DSLSemanticError("the whole real line is not a represented event")
        return coin.omega() if model == "coin" else space.omega()
    if isinstance(node, IntervalLit) and model == "interval":
        return interval.interval(node.lo, node.hi)
    if isinstance(node, RationalSet) and model == "interval":
        return interval.points(node.values)
    if isinstance(node, CylinderLit) and model == "coin":
        return coin.cylinder(node.pairs)
    if isinstance(node, PointSet) and model == "coin":
        return coin.points(node.points)
    if isinstance(node, LabelSet) and model == "finite":
        try:
            return space.event(node.labels)
        except NumerosityError as exc:
            raise DSLSemanticError(str(exc)) from None
    raise DSLSemanticError(f"{type(node).__name__} is not valid in the {model} model")


def evaluate(src: str, model: str, space: Optional[FiniteSpace] = None) -> Event:
    return elaborate(parse_event(src, model), model, space)


# -- rendering --------------------------------------------------------------------


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _braces(items) -> str:
    return "{" + ", ".join(items) + "}"


def _assemble(base: List[str], plus: List[str], minus: List[str]) -> str:
    text = " | ".join(base)
    if minus:
        if len(base) > 1:
            text = f"({text})"
        text = f"{text} \\ {_braces(minus)}"
    if plus:
        text = f"{text} | {_braces(plus)}" if text else _braces(plus)
    return text or "Empty"


def render(e: Event) -> str:
    """Canonical text of an event; parsing and elaborating it gives the event back."""
    if isinstance(e, CoinEvent):
        if not e.indices and e.atoms:
            base = ["Omega"]
        else:
            base = [
                "C(" + ", ".join(f"{i}:{t}" for i, t in zip(e.indices, word)) + ")"
                for word in sorted(e.atoms)
            ]
        return _assemble(base, [str(p) for p in sorted(e.plus)], [str(p) for p in sorted(e.minus)])
    if isinstance(e, IntervalEvent):
        return _assemble(
            [f"[{_fmt(a)}, {_fmt(b)})" for a, b in e.intervals],
            [_fmt(x) for x in sorted(e.plus)],
            [_fmt(x) for x in sorted(e.minus)],
        )
    if isinstance(e, FiniteEvent):
        if not e.members:
            return "Empty"
        if len(e.members) == len(e.space):
            return "Omega"
        return _braces([str(lab) for lab in e.space.labels if lab in e.members])
    raise TypeError(f"not an event: {e!r}")


def render_ast(node) -> str:
    """Fully parenthesized text of an AST (used to inspect precedence)."""
    return _fold(node, _render_node)


def _render_node(node, args) -> str:
    if isinstance(node, UnionNode):
        return f"({args[0]} | {args[1]})"
    if isinstance(node, IntersectNode):
        return f"({args[0]} & {args[1]})"
    if isinstance(node, DifferenceNode):
        return f"({args[0]} \\ {args[1]})"
    if isinstance(node, ComplementNode):
        return f"~{args[0]}"
    if isinstance(node, EmptyLit):
        return "Empty"
    if isinstance(node, OmegaLit):
        return "Omega"
    if isinstance(node, IntervalLit):
        return f"[{_fmt(node.lo)}, {_fmt(node.hi)})"
    if isinstance(node, RationalSet):
        return _braces(_fmt(v) for v in node.values)
    if isinstance(node, CylinderLit):
        return "C(" + ", ".join(f"{i}:{t}" for i, t in node.pairs) + ")"
    if isinstance(node, PointSet):
        return _braces(str(p) for p in node.points)
    if isinstance(node, LabelSet):
        return _braces(node.labels)
    raise TypeError(f"not an AST node: {node!r}")
