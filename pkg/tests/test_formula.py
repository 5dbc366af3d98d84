import pytest
from hypothesis import given, settings, strategies as st

from pragmatist.formula import (
    BOT, And, Atom, FormulaSyntaxError, Imp, Or, atoms, degree, is_atomic, neg, parse,
    subformulas, to_latex,
)

p, q, r = Atom("p"), Atom("q"), Atom("r")


def formulas(max_leaves=8):
    base = st.one_of(st.sampled_from([p, q, r, Atom("#c0")]), st.just(BOT))
    return st.recursive(
        base,
        lambda kids: st.one_of(
            st.builds(Imp, kids, kids), st.builds(Or, kids, kids), st.builds(And, kids, kids)),
        max_leaves=max_leaves,
    )


@given(formulas(max_leaves=9))
@settings(max_examples=300)
def test_print_parse_round_trip(f):
    assert parse(str(f)) == f


@pytest.mark.parametrize("text,expected", [
    ("p -> q -> r", Imp(p, Imp(q, r))),
    ("p & q | r", Or(And(p, q), r)),
    ("p | q & r", Or(p, And(q, r))),
    ("~p & q", And(Imp(p, BOT), q)),
    ("~~p", Imp(Imp(p, BOT), BOT)),
    ("(p -> q) -> r", Imp(Imp(p, q), r)),
    ("p & q -> r | p", Imp(And(p, q), Or(r, p))),
    ("_|_", BOT),
])
def test_precedence(text, expected):
    assert parse(text) == expected


def test_negation_is_implication_into_absurdity():
    assert neg(p) == Imp(p, BOT) == parse("~p")
    assert degree(neg(p)) == 2


@pytest.mark.parametrize("text,d", [
    ("p", 0), ("_|_", 1), ("p -> q", 1), ("~p", 2), ("a -> d & (b | c)", 3),
    ("(a -> b) -> ((c -> c) -> a)", 4), ("p | ~p", 3),
])
def test_degree_counts_constants(text, d):
    assert degree(parse(text)) == d


def test_atoms_and_subformulas():
    f = parse("(p -> q) & ~r")
    assert atoms(f) == {"p", "q", "r"}
    subs = set(subformulas(f))
    assert {p, q, r, BOT, Imp(p, q), Imp(r, BOT), f} <= subs
    assert is_atomic(p) and not is_atomic(BOT) and not is_atomic(f)


@pytest.mark.parametrize("bad", ["", "p ->", "(p", "p q", "p & & q", "->"])
def test_syntax_errors(bad):
    with pytest.raises(FormulaSyntaxError):
        parse(bad)


def test_latex_spacing_and_fresh_atoms():
    assert to_latex(parse("p -> q")) == r"p \to q"
    assert "\\hat{c}_{0}" in to_latex(Atom("#c0"))
