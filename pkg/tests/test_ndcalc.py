import random

import pytest
from hypothesis import given, settings, strategies as st

from gen import random_derivation
from pragmatist.argument import Argument, Rule, hole, leaf, open_assumptions
from pragmatist.build import and_i, and_l, and_r, bot_e, imp_e, imp_i, or_e, or_il, or_ir, unjustified
from pragmatist.formula import parse
from pragmatist.ndcalc import (
    NormalizationError, check_nj, is_normal, normalize, relabel, rename_apart,
    subformula_violations, tags_in,
)
from pragmatist.oracle import provable


def test_valid_rules_pass():
    d = imp_i(and_i(leaf("p", "u"), leaf("p", "u")), "p", "u")
    assert check_nj(d) == []
    d = or_e(leaf("p | q"), or_ir("q", leaf("p", "v")), or_il(leaf("q", "v"), "p"), "v")
    assert check_nj(d) == []
    assert check_nj(bot_e(leaf("_|_"), "p & q")) == []


@pytest.mark.parametrize("bad,fragment", [
    (Argument(parse("q"), Rule.IMP_E, (leaf("p"), leaf("r -> q"))), "minor premiss"),
    (Argument(parse("p"), Rule.AND_E_LEFT, (leaf("p | q"),)), "not a conjunction"),
    (Argument(parse("p | q"), Rule.OR_I_LEFT, (leaf("q"),)), "disjunction"),
    (Argument(parse("p"), Rule.BOT_E, (leaf("q"),)), "absurdity"),
    (unjustified("p", leaf("q")), "unjustified"),
    (Argument(parse("r"), Rule.OR_E, (leaf("p | q"), leaf("r"), leaf("r")), "u"), "discharges no"),
    (Argument(parse("p -> q"), Rule.IMP_I, (leaf("q", "u"),), "u"), "expected p"),
])
def test_violations_are_reported(bad, fragment):
    problems = check_nj(bad)
    assert problems and any(fragment in str(v) for v in problems)


def test_holes_are_not_derivations():
    assert check_nj(and_i(hole("p"), leaf("q")))


def test_vacuous_implication_is_allowed():
    assert check_nj(imp_i(leaf("q"), "p")) == []


def test_implication_detour():
    d = imp_e(leaf("p"), imp_i(and_i(leaf("p", "u"), leaf("q")), "p", "u"))
    n = normalize(d)
    assert n == and_i(leaf("p"), leaf("q"))


def test_conjunction_detour():
    n = normalize(and_r(and_i(leaf("p"), leaf("q"))))
    assert n == leaf("q")


def test_disjunction_detour():
    d = or_e(or_il(leaf("p"), "q"), and_l(and_i(leaf("p", "u"), leaf("r"))),
             and_l(and_i(leaf("q", "u"), leaf("r"))), "u")
    assert normalize(d) == leaf("p")


def test_absurdity_into_elimination_simplifies():
    d = and_l(bot_e(leaf("_|_"), "p & q"))
    assert normalize(d) == bot_e(leaf("_|_"), "p")


def test_permutation_over_case_analysis():
    case = lambda f: and_i(leaf(f, "u"), leaf(f, "u"))
    d = and_l(or_e(leaf("p | p"), case("p"), case("p"), "u"))
    n = normalize(d)
    assert n.rule is Rule.OR_E and is_normal(n) and check_nj(n) == []


def test_normal_input_is_returned_unchanged():
    d = imp_e(leaf("p"), leaf("p -> q"))
    assert normalize(d) is d


def test_fuel_is_enforced():
    d = and_r(and_i(leaf("p"), and_r(and_i(leaf("p"), leaf("q")))))
    with pytest.raises(NormalizationError):
        normalize(d, fuel=1)


def test_relabel_and_rename_apart():
    d = imp_i(leaf("p", "zz"), "p", "zz")
    r = relabel(d)
    assert r.discharges != "zz" and check_nj(r) == []
    s = rename_apart(r, tags_in(r))
    assert not (tags_in(s) & tags_in(r)) and check_nj(s) == []


@given(st.integers(0, 10**6))
@settings(max_examples=150, deadline=None)
def test_normalization_properties(seed):
    d = random_derivation(random.Random(seed))
    assert check_nj(d) == []
    n = normalize(d)
    assert check_nj(n) == []
    assert is_normal(n)
    assert normalize(n) is n
    assert n.conclusion == d.conclusion
    assert set(open_assumptions(n)) <= set(open_assumptions(d))
    # only absurdity eliminations may introduce foreign formulas
    assert all(n.at(c).rule is Rule.BOT_E for c, _ in subformula_violations(n))


@given(st.integers(0, 10**6))
@settings(max_examples=100, deadline=None)
def test_synthesized_sequents_are_provable(seed):
    d = random_derivation(random.Random(seed))
    assert provable(open_assumptions(d), d.conclusion)
