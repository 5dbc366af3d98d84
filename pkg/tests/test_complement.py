import random

import pytest
from hypothesis import given, settings, strategies as st

from gen import random_formula
from pragmatist.argument import leaf, principal_path
from pragmatist.build import imp_e, unjustified
from pragmatist.complement import (
    Complementation, ComplementationError, FreshAtoms, check_complementation, complement_atomic,
    complementation_from_sexpr, dump_complementation, enumerate_complementations,
    proof_case_complementation,
)
from pragmatist.formula import And, Atom, Imp, degree, parse
from pragmatist.textio import read_one


def spines(goal, *gamma):
    arg = unjustified(goal, *(leaf(g) for g in gamma)) if gamma else leaf(goal)
    return [(c.spine, str(c.conclusion), tuple(map(str, c.auxiliary))) for c in proof_case_complementation(arg)]


def test_atomic_goal_is_its_own_complementation():
    assert spines("p", "q") == [((), "p", ())]
    with pytest.raises(ComplementationError):
        complement_atomic(leaf("p & q"))


def test_conjunction_gives_both_projections():
    assert spines("p & q") == [(("and_left",), "p", ()), (("and_right",), "q", ())]


def test_implication_assumes_the_antecedent():
    assert spines("p -> q") == [(("imp",), "q", ("p",))]


def test_disjunction_ends_in_a_fresh_atom():
    [(spine, concl, aux)] = spines("p | q", "r")
    assert spine == ("or",) and concl == "#c0"
    assert aux == ("p -> #c0", "q -> #c0")


def test_absurdity_ends_in_a_fresh_atom():
    assert spines("~p") == [(("imp", "bot"), "#c0", ("p",))]


def test_fresh_atoms_avoid_used_names():
    [(_, concl, _)] = spines("p | q", "#c0")
    assert concl == "#c1"
    supply = FreshAtoms("#k")
    a, supply = supply.take()
    b, _ = supply.take()
    assert (a, b) == (Atom("#k0"), Atom("#k1"))
    with pytest.raises(ComplementationError):
        FreshAtoms(limit=0).take()


def test_each_disjunction_gets_its_own_atom():
    comps = proof_case_complementation(leaf("(p | q) & (r | s)"))
    assert [str(c.conclusion) for c in comps] == ["#c0", "#c1"]


def test_keys_exclude_the_base():
    a = proof_case_complementation(unjustified("p -> q", leaf("r")))[0]
    b = proof_case_complementation(unjustified("p -> q", leaf("s")))[0]
    assert a.key() == b.key()


def test_text_round_trip():
    base = unjustified("p | (q & r)", leaf("s"))
    for comp in proof_case_complementation(base):
        again = complementation_from_sexpr(read_one(dump_complementation(comp)), base)
        assert again == comp and again.key() == comp.key()


def test_full_plugs_the_base_in():
    base = unjustified("p -> q", leaf("r"))
    comp = proof_case_complementation(base)[0]
    full = comp.full()
    assert full.conclusion == parse("q") and full.at((1,)) == base


def test_enumeration_includes_target_atoms():
    comps = list(enumerate_complementations(leaf("p | q"), targets=["r"]))
    assert {str(c.conclusion) for c in comps} == {"#c0", "r"}
    assert all(check_complementation(c) == [] for c in comps)


def test_contract_detects_bad_extension():
    comp = proof_case_complementation(leaf("p -> q"))[0]
    broken = type(comp)(comp.base, leaf("q"), comp.spine, comp.introduced)
    assert check_complementation(broken)


@given(st.integers(0, 10**6))
@settings(max_examples=200, deadline=None)
def test_generated_complementations_satisfy_contract(seed):
    rng = random.Random(seed)
    goal = random_formula(rng, 5)
    gamma = [leaf(random_formula(rng, 2)) for _ in range(rng.randint(0, 2))]
    arg = unjustified(goal, *gamma) if gamma else leaf(goal)
    for comp in proof_case_complementation(arg):
        assert check_complementation(comp) == []


def test_extension_of_higher_degree_is_flagged():
    base = leaf("p -> q")
    ext = imp_e(imp_e(leaf("p"), leaf("p -> q")), leaf("q -> r & r"))
    comp = Complementation.from_extension(base, imp_e(leaf("p"), leaf("p -> q")))
    assert check_complementation(comp) == []
    wide = Complementation(base, ext, ("imp", "imp"), ((parse("p"),), (parse("q -> r & r"),)))
    assert any("degree" in p for p in check_complementation(wide))


@given(st.integers(0, 10**6))
@settings(max_examples=200, deadline=None)
def test_complementation_count_and_spine_length(seed):
    goal = random_formula(random.Random(seed), 5)
    comps = proof_case_complementation(leaf(goal))
    ands = sum(isinstance(f, And) for f in _spine_formulas(goal))
    assert 1 <= len(comps) <= 2 ** ands
    for comp in comps:
        assert len(principal_path(comp.extension)) - 1 <= degree(goal)


def _spine_formulas(f):
    """Occurrences reachable from *f* through conjuncts and consequents."""
    yield f
    if isinstance(f, And):
        yield from _spine_formulas(f.left)
        yield from _spine_formulas(f.right)
    elif isinstance(f, Imp):
        yield from _spine_formulas(f.consequent)
