"""Acceptance criteria 1-7.

Each criterion is one test named ``test_criterion_N_...``; the conftest
prints a PASS/FAIL line per criterion at the end of the run.  Running this
file directly (``python tests/test_acceptance.py``) does the same.
"""
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from gen import (  # noqa: E402
    all_coords, bf_canonical, bf_critical, bf_placid, bf_principal, bf_proper,
    formulas_up_to, random_derivation, random_formula, random_tree,
)
from pragmatist.argument import (  # noqa: E402
    Rule, critical_subarguments, is_canonical, is_placid, is_principal, is_proper, leaf,
    open_assumptions, principal_path,
)
from pragmatist.build import unjustified  # noqa: E402
from pragmatist.complement import (  # noqa: E402
    check_complementation, enumerate_complementations, proof_case_complementation,
)
from pragmatist.corpus import corpus_dir  # noqa: E402
from pragmatist.extract import ExtractionError, extract_report, invert_or, splice_critical  # noqa: E402
from pragmatist.formula import Imp, Or, atoms, degree, parse  # noqa: E402
from pragmatist.kripke import countermodel, refutable_many  # noqa: E402
from pragmatist.ndcalc import check_nj, is_normal, normalize  # noqa: E402
from pragmatist.oracle import parse_sequent, provable  # noqa: E402
from pragmatist.textio import load_argument  # noqa: E402
from pragmatist.witness import (  # noqa: E402
    WellFoundednessError, check_validity, load_witness, search_witness,
)

CORPUS = corpus_dir()


def _manifest():
    out = {}
    for line in (CORPUS / "MANIFEST").read_text().splitlines():
        name, verdict = line.split()
        out[name] = verdict
    return out


def _corpus_witnesses(verdict="extracts"):
    return [(name, load_witness((CORPUS / name).read_text()))
            for name, v in _manifest().items() if v == verdict and name.endswith(".wit")]


# -- 1 -----------------------------------------------------------------------------

def test_criterion_1_case_split_classification():
    start = time.perf_counter()
    load = lambda n: load_argument((CORPUS / f"{n}.arg").read_text())
    arg1, arg1p = load("case-split"), load("case-split-proper")
    assert is_proper(arg1) is True and is_canonical(arg1) is False
    assert is_canonical(arg1p) is True

    arg2 = load("case-split-then-imp")
    assert is_canonical(arg2) is True
    assert arg2.at(principal_path(arg2)[0]).conclusion == parse("e -> f")
    verticals2 = [c for c in all_coords(arg2) if c and arg2.at(c[:-1]).rule is Rule.OR_E and c[-1] in (1, 2)]
    assert verticals2 and not any(is_placid(arg2, c) for c in verticals2)

    arg3 = load("case-split-pushed")
    assert is_canonical(arg3) is True
    verticals3 = [c for c in all_coords(arg3) if c and arg3.at(c[:-1]).rule is Rule.OR_E and c[-1] in (1, 2)]
    assert verticals3 and all(is_placid(arg3, c) for c in verticals3)
    assert time.perf_counter() - start < 1.0


# -- 2 -----------------------------------------------------------------------------

REQUIRED_CASES = {"absurd", "or/absurd", "or/cases", "or/principal", "and", "splice", "package"}


def test_criterion_2_extraction_end_to_end():
    start = time.perf_counter()
    pairs = _corpus_witnesses()
    assert len(pairs) >= 20
    seen, used_minor = set(), set()
    for name, w in pairs:
        arg = w.argument
        d, report = extract_report(arg, w)
        assert check_nj(d) == [], name
        assert d.conclusion == arg.conclusion, name
        assert set(open_assumptions(d)) <= set(open_assumptions(arg)), name
        assert not any(a.startswith(w.fresh_prefix) for _, x in d.occurrences() for a in atoms(x.conclusion)), name
        aux = {f for c in w.complementations() for f in c.auxiliary}
        assert not (set(open_assumptions(d)) - set(open_assumptions(arg))) & aux, name
        for s in report["steps"]:
            seen.add(s["case"])
            if s["case"] == "imp":
                used_minor.add(s["used"])
    assert REQUIRED_CASES <= seen, REQUIRED_CASES - seen
    assert used_minor == {True, False}
    assert {"complex-minor.wit", "nested-critical.wit", "conj-swap.wit"} <= {n for n, _ in pairs}
    assert time.perf_counter() - start < 10.0


# -- 3 -----------------------------------------------------------------------------

THEOREMS = [
    "p -> p", "p -> q -> p", "(p -> q -> r) -> (p -> q) -> p -> r", "p & q -> q & p",
    "p | q -> q | p", "_|_ -> p", "p -> ~~p", "~~(p | ~p)", "~~~p -> ~p",
    "(p -> q) -> ~q -> ~p", "~(p | q) -> ~p & ~q", "~p & ~q -> ~(p | q)",
    "(p & q -> r) -> p -> q -> r", "(p | q -> r) -> (p -> r) & (q -> r)", "~~(~~p -> p)",
]
NON_THEOREMS = ["((p -> q) -> p) -> p", "p | ~p", "~~p -> p", "~p | ~~p", "(p -> q) | (q -> p)"]


def test_criterion_3_oracle_agreement():
    assert len(THEOREMS) == 15 and len(NON_THEOREMS) == 5
    for f in THEOREMS:
        assert provable([], f) and countermodel([], f) is None, f
    for f in NON_THEOREMS:
        assert not provable([], f) and countermodel([], f) is not None, f
    for name, w in _corpus_witnesses():
        d, _ = extract_report(w.argument, w)
        assert provable(open_assumptions(w.argument), w.argument.conclusion), name
        assert provable(open_assumptions(d), d.conclusion), name
    fs = formulas_up_to(4, ("p", "q"))
    refuted = refutable_many(fs, ["p", "q"], max_worlds=3)
    disagreements = [str(f) for f, r in zip(fs, refuted) if provable([], f) == bool(r)]
    assert disagreements == [], disagreements[:10]


# -- 4 -----------------------------------------------------------------------------

def test_criterion_4_definitions_by_brute_force():
    start = time.perf_counter()
    rng = random.Random(20240611)
    mismatches, canonical, with_criticals = [], 0, 0
    for _ in range(1200):
        a = random_tree(rng, budget=25)
        assert a.size <= 25 and len(set().union(*(atoms(x.conclusion) for _, x in a.occurrences()))) <= 3
        ok = (is_proper(a) == bf_proper(a) and is_canonical(a) == bf_canonical(a)
              and sorted(critical_subarguments(a)) == bf_critical(a)
              and all(is_principal(a, c) == bf_principal(a, c) and is_placid(a, c) == bf_placid(a, c)
                      for c in all_coords(a)))
        if not ok:
            mismatches.append(a)
        canonical += bf_canonical(a)
        with_criticals += bool(bf_critical(a))
    assert mismatches == []
    assert canonical > 50 and with_criticals > 50
    assert time.perf_counter() - start < 30.0


# -- 5 -----------------------------------------------------------------------------

def test_criterion_5_complementation_contracts():
    rng = random.Random(7)
    violations, checked = [], 0
    for _ in range(600):
        goal = random_formula(rng, 5)
        assert degree(goal) <= 5
        gamma = [leaf(random_formula(rng, 2)) for _ in range(rng.randint(0, 2))]
        arg = unjustified(goal, *gamma) if gamma else leaf(goal)
        comps = proof_case_complementation(arg) + list(enumerate_complementations(arg, targets=["p"], depth=4))
        for comp in comps:
            checked += 1
            problems = check_complementation(comp)
            if problems:
                violations.append((str(goal), problems))
    assert checked >= 500
    assert violations == [], violations[:5]


# -- 6 -----------------------------------------------------------------------------

def _normalization_problems(d):
    n = normalize(d)
    out = []
    if check_nj(n):
        out.append("not a derivation")
    if not is_normal(n) or normalize(n) is not n:
        out.append("not idempotent")
    if n.conclusion != d.conclusion:
        out.append("conclusion changed")
    if not set(open_assumptions(n)) <= set(open_assumptions(d)):
        out.append("assumptions enlarged")
    return out


def test_criterion_6_normalization():
    derivations = []
    for name, v in _manifest().items():
        arg = load_argument((CORPUS / name.replace(".wit", ".arg")).read_text())
        if not check_nj(arg):
            derivations.append(arg)
    for _, w in _corpus_witnesses():
        derivations.append(extract_report(w.argument, w)[0])
        for comp in w.complementations():
            spliced = splice_critical(w.respond(comp))
            derivations.append(spliced)
            if comp.spine and comp.spine[-1] == "or":
                disj = comp.extension.premisses[0].conclusion
                assert isinstance(disj, Or)
                c = comp.conclusion
                out = invert_or(spliced, disj.left, disj.right, c)
                assert not {Imp(disj.left, c), Imp(disj.right, c)} & set(open_assumptions(normalize(out)))
    rng = random.Random(11)
    for _ in range(400):
        d = random_derivation(rng)
        assert provable(open_assumptions(d), d.conclusion)
        derivations.append(d)
    problems = [(str(d.conclusion), p) for d in derivations for p in _normalization_problems(d)]
    assert len(derivations) > 400
    assert problems == [], problems[:5]


# -- 7 -----------------------------------------------------------------------------

SEARCHED = [
    "p & q |- q & p", "p | q |- q | p", "p | (q | r) |- (p | q) | r", "p & q -> r |- p -> q -> r",
    "p | q, ~q |- p | r", "_|_ |- p | q", "p |- ~~p", "|- (p -> q) -> (q -> r) -> p -> r",
]


def test_criterion_7_well_foundedness():
    fired = []
    runs = 0
    for verdict in ("extracts", "invalid"):
        for name, w in _corpus_witnesses(verdict):
            try:
                check_validity(w.argument, w)
                extract_report(w.argument, w)
            except ExtractionError:
                assert verdict == "invalid"
            except WellFoundednessError as e:
                fired.append((name, str(e)))
            runs += 1
    for s in SEARCHED:
        gamma, goal = parse_sequent(s)
        arg = unjustified(goal, *map(leaf, gamma)) if gamma else unjustified(goal, leaf(goal, "h"), tag="h")
        try:
            w = search_witness(arg)
            assert w is not None, s
            extract_report(arg, w)
        except WellFoundednessError as e:
            fired.append((s, str(e)))
        runs += 1
    assert runs >= 30
    assert fired == []


if __name__ == "__main__":
    import pytest
    sys.exit(pytest.main([__file__, "-q"]))
