import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from numerosities import dsl, randgen
from numerosities.dsl import (
    ComplementNode,
    CylinderLit,
    DifferenceNode,
    IntersectNode,
    IntervalLit,
    RationalSet,
    UnionNode,
)
from numerosities.errors import DSLError, DSLSemanticError, DSLSyntaxError
from numerosities.events import CoinPoint, coin, interval

F = Fraction
seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_cylinder_literal():
    assert dsl.parse_event("C(1:H, 3:T)", "coin") == CylinderLit(((1, "H"), (3, "T")))


def test_interval_difference():
    node = dsl.parse_event("[0, 3/4) \\ {1/2}", "interval")
    assert node == DifferenceNode(IntervalLit(F(0), F(3, 4)), RationalSet((F(1, 2),)))


def test_elaboration_examples():
    assert dsl.evaluate("C(1:H) | C(1:T)", "coin") == coin.omega()
    assert dsl.evaluate("~C(2:H)", "coin") == coin.cylinder({2: "T"})
    assert dsl.evaluate("{HTH(T)}", "coin") == coin.points([CoinPoint("HTH", "T")])
    assert dsl.evaluate("C(1:H) ∪ C(1:T)", "coin") == coin.omega()
    assert dsl.evaluate("¬C(2:H) ∩ Omega", "coin") == coin.cylinder({2: "T"})
    assert dsl.evaluate("[0,2) ∖ [1,2)", "interval") == interval.interval(0, 1)


@pytest.mark.parametrize(
    "src, text",
    [
        ("C(1:H, 3:T)", "C(1:H, 3:T)"),
        ("[0, 3/4) \\ {1/2}", "[0, 3/4) \\ {1/2}"),
        ("{HTH(T)}", "{HTH(T)}"),
        ("C(1:H) | C(1:T)", "Omega"),
        ("Empty", "Empty"),
        ("[0,1) | [1,2)", "[0, 2)"),
        ("[0,1) \\ {0}", "[0, 1) \\ {0}"),
    ],
)
def test_render_examples(src, text):
    model = "coin" if "C(" in src or "{H" in src or src in ("Empty",) else "interval"
    assert dsl.render(dsl.evaluate(src, model)) == text


@pytest.mark.parametrize(
    "src, expected",
    [
        ("[1, 1)", DSLSemanticError),
        ("[2, 1)", DSLSemanticError),
        ("C(0:H)", DSLSemanticError),
        ("C(1:H, 1:T)", DSLSemanticError),
        ("~[0,1)", DSLSemanticError),
        ("{0.5}", DSLSemanticError),
        ("[0, 1/0)", DSLSemanticError),
        ("[0, 1", DSLSyntaxError),
        ("C(1:H) \\ C(2:H) \\ C(3:H)", DSLSyntaxError),
        ("C(1:X)", DSLSyntaxError),
        ("", DSLSyntaxError),
        ("C(1:H) C(2:H)", DSLSyntaxError),
    ],
)
def test_errors(src, expected):
    model = "coin" if "C(" in src else "interval"
    with pytest.raises(expected):
        dsl.evaluate(src, model)


def test_diagnostic_positions():
    with pytest.raises(DSLSyntaxError) as info:
        dsl.parse_event("C(1:H\n| ", "coin")
    assert (info.value.line, info.value.column) == (2, 1)
    assert "expected ')'" in str(info.value)
    with pytest.raises(DSLSemanticError) as info:
        dsl.parse_event("[0,1) | [3, 2)", "interval")
    assert info.value.column == 9


def test_depth_guard():
    with pytest.raises(DSLError):
        dsl.parse_event("(" * 5000 + "Omega" + ")" * 5000, "coin")
    with pytest.raises(DSLError):
        dsl.parse_event("~" * 5000 + "Omega", "coin")


@pytest.mark.parametrize(
    "src, shape",
    [
        ("~A & B", IntersectNode(ComplementNode("A"), "B")),
        ("A | B & C", UnionNode("A", IntersectNode("B", "C"))),
        ("A & B | C", UnionNode(IntersectNode("A", "B"), "C")),
        ("A & B \\ C", IntersectNode("A", DifferenceNode("B", "C"))),
        ("A \\ B & C", IntersectNode(DifferenceNode("A", "B"), "C")),
        ("A \\ B | C", UnionNode(DifferenceNode("A", "B"), "C")),
        ("~A \\ B", DifferenceNode(ComplementNode("A"), "B")),
        ("A | B | C", UnionNode(UnionNode("A", "B"), "C")),
        ("A \\ (B | C)", DifferenceNode("A", UnionNode("B", "C"))),
    ],
)
def test_precedence(src, shape):
    lits = {"A": "C(1:H)", "B": "C(2:H)", "C": "C(3:H)"}
    node = dsl.parse_event("".join(lits.get(ch, ch) for ch in src), "coin")

    def subst(s):
        if isinstance(s, str):
            return CylinderLit(((int(lits[s][2]), "H"),))
        fields = {k: subst(v) for k, v in vars(s).items()}
        return type(s)(**fields)

    assert node == subst(shape)


def test_parse_corpus():
    text = "# header\nC(1:H)\n\nOmega  # trailing\n~C(2:T)\n"
    parsed = dsl.parse_corpus(text, "coin")
    assert [line for line, _ in parsed] == [2, 4, 5]
    with pytest.raises(DSLError) as info:
        dsl.parse_corpus("Omega\nC(1:\n", "coin")
    assert info.value.line == 2


def test_finite_labels():
    space = randgen.finite_space(4)
    e = dsl.evaluate("{x0, x1} | ~{x1, x2}", "finite", space)
    assert set(e.members) == {"x0", "x1", "x3"}
    assert dsl.evaluate(dsl.render(e), "finite", space) == e
    with pytest.raises(DSLSemanticError):
        dsl.evaluate("{x9}", "finite", space)


@pytest.mark.parametrize("model", ["coin", "interval", "finite"])
@given(seed=seeds)
def test_round_trip(model, seed):
    rng = random.Random(seed)
    space = randgen.finite_space(5)
    e = randgen.event(rng, model, space)
    text = dsl.render(e)
    assert dsl.evaluate(text, model, space) == e
    # the fully parenthesized AST rendering parses to the same tree
    node = dsl.parse_event(text, model)
    assert dsl.parse_event(dsl.render_ast(node), model) == node


def test_fuzz_totality():
    rng = random.Random(2024)
    alphabet = list(b"()[]{},:/\\|&~ 0123456789HTCOmegaEmpty\n") + list(range(256))
    for k in range(100_000):
        size = rng.randint(0, 24)
        if k % 2:
            raw = bytes(rng.choice(alphabet) for _ in range(size))
        else:
            raw = bytes(rng.randrange(256) for _ in range(size))
        src = raw.decode("utf-8", errors="replace")
        for model in ("coin", "interval"):
            try:
                dsl.evaluate(src, model)
            except DSLError as exc:
                assert exc.line >= 1 and exc.column >= 1


def test_long_operator_chains():
    src = " | ".join(f"C({k % 6 + 1}:H)" for k in range(2000))
    e = dsl.evaluate(src, "coin")
    assert e == dsl.evaluate(" | ".join(f"C({k}:H)" for k in range(1, 7)), "coin")
    assert dsl.render_ast(dsl.parse_event(src, "coin")).count("|") == 1999
