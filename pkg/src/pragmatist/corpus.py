"""The bundled corpus: hand-built arguments and witnesses with their expected verdicts.

Each item is built here in code.  The text files under ``data/corpus`` are
dumps of these builders, and ``MANIFEST`` lists ``file verdict`` pairs.
Verdicts:

``canonical`` / ``not-canonical``
    classification of an ``.arg`` file;
``not-derivation``
    the ``.arg`` file breaks an NJ rule schema;
``extracts``
    the ``.wit`` file is a valid witness and extraction yields a checked
    derivation whose sequent the oracle proves;
``invalid``
    the ``.wit`` file fails validity checking.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable

from .argument import Argument, Rule, is_canonical, open_assumptions, step
from .build import (
    and_i, and_l, and_r, bot_e, imp_e, imp_i, leaf as L, or_e, or_il, or_ir, unjustified,
)
from .complement import Complementation
from .formula import Imp, parse
from .ndcalc import check_nj
from .textio import dump_argument, load_argument
from .witness import Package, ValidityWitness, check_validity, dump_witness, load_witness

__all__ = ["CorpusItem", "items", "write_corpus", "corpus_dir", "run_corpus", "CorpusResult"]


@dataclass(frozen=True)
class CorpusItem:
    name: str
    argument: Argument
    verdict: str
    witness: ValidityWitness | None = None
    note: str = ""

    @property
    def file(self) -> str:
        return f"{self.name}.wit" if self.witness is not None else f"{self.name}.arg"


def P(canonical: Argument, subs: dict | None = None) -> Package:
    return Package(canonical, subs or {})


def W(arg: Argument, *packages) -> ValidityWitness:
    return ValidityWitness.from_packages(arg, list(packages))


def _c(fn: Callable[[object], Argument]) -> Callable[[Complementation], Package]:
    """Package whose canonical argument mentions the complementation's atom."""
    return lambda comp: P(fn(comp.conclusion))


BIG = "(a -> b) -> ((c -> c) -> a)"
G5 = "g & (g & (g & (g & (g & g))))"
SPLIT_MAJOR = "a -> d & (b | c)"


def _cc_witness(crit: Argument) -> ValidityWitness:
    return W(crit, P(L("c")))


def _complex_minor_canonical() -> tuple[Argument, dict]:
    cc = imp_i(L("c", "1"), "c", "1")
    canon = imp_e(imp_e(cc, imp_e(L("a -> b"), L(BIG))), L("a -> b"))
    return canon, {(0, 0): _cc_witness(cc)}


def _split_disjunction() -> Argument:
    return and_r(imp_e(L("a"), L(SPLIT_MAJOR)))


def _split_vertical(atom: str, proper: bool) -> Argument:
    if proper:
        return imp_e(L(atom, "u"), L(f"{atom} -> e"))
    return unjustified("e", L(atom, "u"))


_SPLIT_NAMES = {1: "case-split", 2: "case-split-then-imp", 3: "case-split-pushed"}


def case_split(which: int, proper_verticals: bool) -> Argument:
    """A case analysis on b | c (1), the same followed by ImpE (2), and with the ImpE pushed into the cases (3)."""
    v1, v2 = _split_vertical("b", proper_verticals), _split_vertical("c", proper_verticals)
    if which == 1:
        return or_e(_split_disjunction(), v1, v2, "u")
    if which == 2:
        return imp_e(case_split(1, proper_verticals), L("e -> f"))
    return or_e(_split_disjunction(), imp_e(v1, L("e -> f")), imp_e(v2, L("e -> f")), "u")


def _claim(goal: str, *gamma: str) -> Argument:
    """An argument asserting ``gamma |- goal`` in one unjustified step."""
    if gamma:
        return unjustified(goal, *(L(g) for g in gamma))
    return unjustified(goal, L(goal, "h"), tag="h")


def _witness_items() -> list[CorpusItem]:
    out = []

    def add(name, arg, *packages, note=""):
        out.append(CorpusItem(name, arg, "extracts", W(arg, *packages), note))

    add("identity", L("p"), P(L("p")), note="single occurrence")
    mp = imp_e(L("p"), L("p -> q"))
    add("modus-ponens", mp, P(mp), note="atomic goal")
    pq = L("p & q")
    add("conj-swap", _claim("q & p", "p & q"), P(and_r(pq)), P(and_l(pq)), note="both projections")
    add("absurd-disjunction", bot_e(L("_|_"), "p | q"),
        _c(lambda c: bot_e(L("_|_"), c)), note="disjunction, absurdity branch")
    add("absurd-identity", L("_|_"), _c(lambda c: bot_e(L("_|_"), c)), note="absurdity")
    add("or-left", or_il(L("p"), "q"),
        _c(lambda c: imp_e(L("p"), L(Imp(parse("p"), c)))), note="disjunction, principal branch, left")
    add("or-right", or_ir("p", L("q")),
        _c(lambda c: imp_e(L("q"), L(Imp(parse("q"), c)))), note="disjunction, principal branch, right")
    add("disj-swap", or_e(L("p | q"), or_ir("q", L("p", "u")), or_il(L("q", "u"), "p"), "u"),
        _c(lambda c: or_e(L("p | q"), imp_e(L("p", "u"), L(Imp(parse("p"), c))),
                          imp_e(L("q", "u"), L(Imp(parse("q"), c))), "u")),
        note="disjunction, case branch then principal branch")
    add("vacuous-imp", imp_i(L("q"), "p"), P(L("q")), note="implication, unused minor")
    add("identity-imp", imp_i(L("p", "u"), "p", "u"), P(L("p")), note="implication, used minor")
    add("imp-chain", imp_i(imp_e(imp_e(L("p", "u"), L("p -> q")), L("q -> r")), "p", "u"),
        P(imp_e(imp_e(L("p"), L("p -> q")), L("q -> r"))))
    conj = and_i(L("p"), L("q"))
    add("curry", _claim("p -> q -> r", "p & q -> r"),
        P(imp_e(conj, L("p & q -> r")), {(0,): W(conj, P(L("p")), P(L("q")))}),
        note="critical introduction")
    canon, subs = _complex_minor_canonical()
    add("complex-minor", canon, P(canon, subs), note="complex minor premiss handled by a critical")
    add("disj-absurd", or_e(L("p | q"), imp_e(L("p", "u"), L("~p")), imp_e(L("q", "u"), L("~q")), "u"),
        _c(lambda c: or_e(L("p | q"), bot_e(imp_e(L("p", "u"), L("~p")), c),
                          bot_e(imp_e(L("q", "u"), L("~q")), c), "u")),
        note="absurdity through case analysis")
    add("imp-and-right", imp_i(and_r(imp_e(L("p", "u"), L("p -> q & r"))), "p", "u"),
        P(and_r(imp_e(L("p"), L("p -> q & r")))))
    x = L("p & (q & r)")
    add("conj-assoc", _claim("(p & q) & r", "p & (q & r)"),
        P(and_l(x)), P(and_l(and_r(x))), P(and_r(and_r(x))))
    add("weaken-disj", _claim("q -> p | r", "p"),
        _c(lambda c: imp_e(L("p"), L(Imp(parse("p"), c)))), note="implication then disjunction")
    add("disj-syllogism", _claim("p | r", "p | q", "~q"),
        _c(lambda c: or_e(L("p | q"), imp_e(L("p", "u"), L(Imp(parse("p"), c))),
                          bot_e(imp_e(L("q", "u"), L("~q")), c), "u")),
        note="all three disjunction branches")
    add("detour", _claim("p | q", "p", "s", "~s"),
        _c(lambda c: imp_e(imp_e(imp_e(L("p"), L(Imp(parse("p"), c))),
                                 bot_e(imp_e(L("s"), L("~s")), Imp(c, parse("p")))),
                           L(Imp(parse("p"), c)))),
        note="normalization removes the auxiliary implication")
    crit_b = unjustified("b", L("a -> b"), L(BIG))
    canon_b, subs_b = _complex_minor_canonical()
    add("nested-critical", _claim("g", f"b -> {G5}", "a -> b", BIG),
        P(and_l(imp_e(crit_b, L(f"b -> {G5}"))), {(0, 0): W(crit_b, P(canon_b, subs_b))}),
        note="critical whose witness has its own critical")
    pq = L("p & q")
    add("conj-mixed", _claim("(r -> p) & (q | s)", "p & q"),
        P(and_l(pq)), _c(lambda c: imp_e(and_r(pq), L(Imp(parse("q"), c)))))
    contra = lambda: imp_e(L("p"), L("~p"))
    add("conj-absurd", _claim("q & _|_", "~p", "p"),
        P(bot_e(contra(), "q")), _c(lambda c: bot_e(contra(), c)))
    add("pairing", _claim("p -> q -> p & q"), P(L("p")), P(L("q")))
    add("transitivity", _claim("(p -> q) -> (q -> r) -> p -> r"),
        P(imp_e(imp_e(L("p"), L("p -> q")), L("q -> r"))))
    add("double-negation-intro", _claim("~~p", "p"), _c(lambda c: bot_e(contra(), c)))

    def disj_assoc(c):
        to_c = L(Imp(parse("p | q"), c))
        return or_e(L("p | (q | r)"),
                    imp_e(or_il(L("p", "u"), "q"), to_c),
                    or_e(L("q | r", "u"), imp_e(or_ir("p", L("q", "v")), to_c),
                         imp_e(L("r", "v"), L(Imp(parse("r"), c))), "v"),
                    "u")

    def disj_assoc_pkg(comp):
        canon = disj_assoc(comp.conclusion)
        s1, s2 = canon.at((1, 0)), canon.at((2, 1, 0))
        return P(canon, {
            (1, 0): W(s1, _c(lambda c: imp_e(L("p"), L(Imp(parse("p"), c))))),
            (2, 1, 0): W(s2, _c(lambda c: imp_e(L("q"), L(Imp(parse("q"), c))))),
        })

    add("disj-assoc", _claim("(p | q) | r", "p | (q | r)"), disj_assoc_pkg,
        note="criticals that use case assumptions")
    add("or-intro-imp", _claim("p -> p | q"), _c(lambda c: imp_e(L("p"), L(Imp(parse("p"), c)))))

    e_sub = and_l(and_i(imp_e(L("b", "u"), L("b -> e")), L("b", "u")))
    ex3 = or_e(_split_disjunction(), imp_e(e_sub, L("e -> f")),
               imp_e(imp_e(L("c", "u"), L("c -> e")), L("e -> f")), "u")
    add("case-split-pushed-package", ex3,
        P(ex3, {(1, 0): W(e_sub, P(imp_e(L("b"), L("b -> e"))))}),
        note="permuted argument with a critical vertical premiss subargument")
    return out


def _invalid_items() -> list[CorpusItem]:
    out = []
    arg = case_split(2, proper_verticals=False)
    inner = arg.at((0,))
    w = W(arg, P(arg, {(0,): W(inner, P(case_split(1, True)))}))
    out.append(CorpusItem("case-split-then-imp-package", arg, "invalid", w,
                          "its critical subargument is not of lower degree"))
    arg = _claim("q", "p", "p -> q")
    out.append(CorpusItem("leak", arg, "invalid", W(arg, P(imp_e(L("r"), L("r -> q")))),
                          "package uses an assumption outside the argument"))
    return out


def _argument_items() -> list[CorpusItem]:
    out = []
    for which in (1, 2, 3):
        for proper in (False, True):
            arg = case_split(which, proper)
            name = _SPLIT_NAMES[which] + ("-proper" if proper else "")
            out.append(CorpusItem(name, arg, "canonical" if is_canonical(arg) else "not-canonical"))
    # the inner step's major premiss yields (c -> c) -> a, not a
    misread = imp_e(step(Rule.IMP_E, "a", L("a -> b"), L(BIG)), L("a -> b"))
    out.append(CorpusItem("misread-major", misread, "not-derivation",
                          note="inner step yields (c -> c) -> a, not a"))
    out.append(CorpusItem("conj-intro", and_i(L("p"), L("q")), "not-canonical"))
    return out


def items() -> list[CorpusItem]:
    return _argument_items() + _witness_items() + _invalid_items()


def manifest_text() -> str:
    return "".join(f"{it.file} {it.verdict}\n" for it in items())


def write_corpus(directory: str | Path) -> list[Path]:
    """Dump every item (``.arg``, plus ``.wit`` when it has a witness) and the manifest."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    written = []
    for it in items():
        p = d / f"{it.name}.arg"
        p.write_text(dump_argument(it.argument) + "\n")
        written.append(p)
        if it.witness is not None:
            p = d / f"{it.name}.wit"
            p.write_text(dump_witness(it.witness) + "\n")
            written.append(p)
    p = d / "MANIFEST"
    p.write_text(manifest_text())
    written.append(p)
    return written


def corpus_dir() -> Path:
    return Path(str(resources.files("pragmatist") / "data" / "corpus"))


@dataclass
class CorpusResult:
    file: str
    expected: str
    actual: str
    seconds: float
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


def verdict_for(path: Path) -> tuple[str, str]:
    """Recompute the verdict of one corpus file, with a short detail line."""
    from .extract import ExtractionError, extract
    from .oracle import provable
    text = path.read_text()
    if path.suffix == ".arg":
        arg = load_argument(text)
        broken = [v for v in check_nj(arg) if v.rule != "Unjustified"]
        if broken:
            return "not-derivation", str(broken[0])
        return ("canonical" if is_canonical(arg) else "not-canonical"), ""
    w = load_witness(text)
    report = check_validity(w.argument, w)
    if not report.ok:
        return "invalid", report.problems()[0]
    try:
        d = extract(w.argument, w)
    except ExtractionError as e:
        return "extraction-failed", str(e)
    if not provable(open_assumptions(d), d.conclusion):
        return "oracle-disagrees", ""
    return "extracts", f"{d.size} occurrences"


def run_corpus(directory: str | Path | None = None) -> list[CorpusResult]:
    d = corpus_dir() if directory is None else Path(directory)
    results = []
    for line in (d / "MANIFEST").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, expected = line.split()
        t = time.perf_counter()
        try:
            actual, detail = verdict_for(d / name)
        except Exception as e:  # a broken file is a failed item, not a crash
            actual, detail = "error", f"{type(e).__name__}: {e}"
        results.append(CorpusResult(name, expected, actual, time.perf_counter() - t, detail))
    return results
