"""From a validity witness to a natural deduction derivation.

For ``Gamma |- G`` the witness answers each proof-case complementation
with a package concluding an atom ``C``.  Splicing the recursively
extracted critical subarguments into a package gives a derivation of ``C``
from the argument's and the auxiliary assumptions.  Walking the
complementation's spine from ``C`` back up to ``G``, each elimination is
inverted:

* ``AndE``: both projections are derived, then joined by ``AndI``;
* ``ImpE``: the assumed minor premiss is discharged by ``ImpI``;
* ``OrE`` into a fresh ``C``: the derivation is normalized and its last
  steps are rewritten to conclude the disjunction instead;
* ``BotE`` into a fresh ``C``: the derivation of absurdity is dug out.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .argument import (
    Argument, Coord, Rule, bindings, critical_subarguments, degree_of_argument,
    discharge_context, open_assumptions,
)
from .build import and_i, or_il, or_ir
from .complement import Complementation
from .formula import BOT, And, Atom, Bot, Formula, Imp, Or, atoms
from .ndcalc import DEFAULT_FUEL, check_nj, normalize, relabel, rename_apart, tags_in, _Supply
from .witness import Package, ValidityWitness, WellFoundednessError, check_validity

__all__ = [
    "ExtractionError", "ExtractionTrace", "splice_critical", "prune_vacuous_cases",
    "invert_bot", "invert_or", "invert_and", "invert_imp", "extract", "extract_report",
]


_FORMULA_TYPES = (Atom, Bot, Imp, Or, And)


class ExtractionError(ValueError):
    pass


@dataclass
class ExtractionTrace:
    """What the extraction did, in a JSON-friendly shape."""
    steps: list[dict] = field(default_factory=list)

    def add(self, **entry):
        self.steps.append({k: (str(v) if isinstance(v, _FORMULA_TYPES) else v) for k, v in entry.items()})


def _uses_tag(arg: Argument, tag: str) -> bool:
    return any(n.tag == tag for _, n in arg.leaves())


def prune_vacuous_cases(d: Argument) -> Argument:
    """Replace every ``OrE`` with a case that discharges nothing by that case."""
    if d.is_leaf:
        return d
    ps = [prune_vacuous_cases(p) for p in d.premisses]
    if d.rule is Rule.OR_E:
        for i in (1, 2):
            if d.discharges is None or not _uses_tag(ps[i], d.discharges):
                return ps[i]
    return d.with_premisses(ps)


def _fresh_tag(*args: Argument) -> str:
    used = set()
    for a in args:
        used |= tags_in(a)
    return _Supply(used).fresh()


def _bind_open(d: Argument, wanted, tag_for) -> Argument:
    """Tag the open leaves whose formula *wanted* accepts; *tag_for* gives the tag."""
    bound = bindings(d)

    def walk(node: Argument, coord: Coord) -> Argument:
        if node.is_leaf:
            if not node.hole and coord not in bound and wanted(node.conclusion):
                return Argument(node.conclusion, tag=tag_for(node.conclusion))
            return node
        return node.with_premisses([walk(p, coord + (i,)) for i, p in enumerate(node.premisses)])
    return walk(d, ())


def splice_critical(pkg: Package, *, fuel: int = DEFAULT_FUEL, _measure: int | None = None,
                    _trace: ExtractionTrace | None = None) -> Argument:
    """The package's canonical argument with every critical subargument replaced by its extraction.

    Open leaves of an extracted piece are rebound to the discharges in
    force at its position when the formulas match (innermost first).
    """
    arg = pkg.canonical
    measure = degree_of_argument(arg) if _measure is None else _measure
    out = arg
    for c in critical_subarguments(arg):
        sub = arg.at(c)
        w = pkg.sub_witnesses.get(c)
        if w is None:
            raise ExtractionError(f"no witness for the critical subargument at {list(c)}")
        d = degree_of_argument(sub)
        if d >= measure:
            raise WellFoundednessError(f"critical at {list(c)} has degree {d}, not below {measure}")
        try:
            piece = extract(sub, w, fuel=fuel, _measure=d, _trace=_trace)
        except ExtractionError as e:
            raise ExtractionError(f"critical subargument at {list(c)}: {e}") from None
        piece = rename_apart(piece, tags_in(out))
        ctx = discharge_context(arg, c)
        table = {}
        for tag, f in ctx:
            table.setdefault(f, tag)
        piece = _bind_open(piece, lambda f: f in table, lambda f: table[f])
        out = out.replace(c, piece)
        if _trace is not None:
            _trace.add(case="splice", position=list(c), conclusion=sub.conclusion,
                       rebound=sorted({str(f) for f in table}))
    out = relabel(prune_vacuous_cases(out))
    problems = check_nj(out)
    if problems:
        raise ExtractionError("spliced package is not a derivation: " + "; ".join(map(str, problems)))
    return out


def invert_bot(d: Argument, c: Formula | None = None, *, fuel: int = DEFAULT_FUEL) -> Argument:
    """A derivation of absurdity from one of the fresh atom *c*.

    Normal derivations of a fresh atom end in ``BotE`` or in ``OrE`` steps
    whose cases do; the ``OrE`` context is rebuilt around the cases.
    """
    d = normalize(d, fuel)
    if c is not None and d.conclusion != c:
        raise ExtractionError(f"derivation concludes {d.conclusion}, expected {c}")

    def go(node: Argument) -> Argument:
        if node.rule is Rule.BOT_E:
            return node.premisses[0]
        if node.rule is Rule.OR_E:
            cases = [go(node.premisses[1]), go(node.premisses[2])]
            for case in cases:
                if not _uses_tag(case, node.discharges):
                    return case
            return Argument(BOT, Rule.OR_E, (node.premisses[0], *cases), node.discharges)
        how = "an assumption" if node.is_leaf else f"{node.rule.value}"
        raise ExtractionError(f"fresh atom {node.conclusion} obtained by {how}; it must come from _|_E or |E")
    return relabel(go(d))


def invert_or(d: Argument, a: Formula, b: Formula, c: Formula, *, fuel: int = DEFAULT_FUEL,
              _trace: ExtractionTrace | None = None) -> Argument:
    """Turn a derivation of the fresh atom *c* using ``a -> c`` and ``b -> c`` into one of ``a | b``."""
    goal = Or(a, b)
    ac, bc = Imp(a, c), Imp(b, c)
    d = normalize(d, fuel)

    def go(node: Argument) -> Argument:
        if node.rule is Rule.BOT_E:
            if _trace is not None:
                _trace.add(case="or/absurd", conclusion=goal)
            return Argument(goal, Rule.BOT_E, node.premisses)
        if node.rule is Rule.OR_E:
            if _trace is not None:
                _trace.add(case="or/cases", major=node.premisses[0].conclusion)
            cases = [go(node.premisses[1]), go(node.premisses[2])]
            for case in cases:
                if not _uses_tag(case, node.discharges):
                    return case
            return Argument(goal, Rule.OR_E, (node.premisses[0], *cases), node.discharges)
        if node.rule is Rule.IMP_E and node.premisses[1].is_leaf:
            major = node.premisses[1].conclusion
            if major in (ac, bc):
                if _trace is not None:
                    _trace.add(case="or/principal", assumption=major)
                minor = node.premisses[0]
                return or_il(minor, b) if major == ac else or_ir(a, minor)
        how = "an assumption" if node.is_leaf else node.rule.value
        raise ExtractionError(f"fresh atom {c} obtained by {how}, not from {ac}, {bc}, _|_E or |E")

    out = normalize(relabel(go(d)), fuel)
    left = {ac, bc} & set(open_assumptions(out))
    if left:
        raise ExtractionError(f"normal form still depends on {', '.join(sorted(map(str, left)))}")
    return out


def invert_and(d_left: Argument, d_right: Argument) -> Argument:
    return relabel(and_i(d_left, rename_apart(d_right, tags_in(d_left))))


def invert_imp(d: Argument, a: Formula) -> Argument:
    """``ImpI`` discharging every open occurrence of *a* (none at all is fine)."""
    tag = _fresh_tag(d)
    body = _bind_open(d, lambda f: f == a, lambda f: tag)
    return relabel(Argument(Imp(a, d.conclusion), Rule.IMP_I, (body,), tag))


def extract(arg: Argument, w: ValidityWitness, *, fuel: int = DEFAULT_FUEL,
            _measure: int | None = None, _trace: ExtractionTrace | None = None) -> Argument:
    """A derivation of the conclusion of *arg* from at most its assumptions."""
    measure = degree_of_argument(arg)
    if _measure is not None and measure > _measure:
        raise WellFoundednessError(f"argument degree {measure} exceeds the measure {_measure}")
    report = check_validity(arg, w)
    if not report.ok:
        raise ExtractionError("witness does not establish validity: " + "; ".join(report.problems()))
    comps = w.complementations()
    by_spine: dict[tuple, Complementation] = {cp.spine: cp for cp in comps}

    def spliced(spine: tuple) -> Argument:
        comp = by_spine[spine]
        pkg = w.respond(comp)
        if _trace is not None:
            _trace.add(case="package", spine="/".join(spine) or "identity", conclusion=comp.conclusion)
        return splice_critical(pkg, fuel=fuel, _measure=measure, _trace=_trace)

    def derive(x: Formula, spine: tuple) -> Argument:
        if spine in by_spine and by_spine[spine].conclusion == x:
            return spliced(spine)
        if isinstance(x, And):
            left = derive(x.left, spine + ("and_left",))
            right = derive(x.right, spine + ("and_right",))
            if _trace is not None:
                _trace.add(case="and", conclusion=x)
            return invert_and(left, right)
        if isinstance(x, Imp):
            body = derive(x.consequent, spine + ("imp",))
            if _trace is not None:
                _trace.add(case="imp", conclusion=x, discharged=x.antecedent,
                           used=x.antecedent in open_assumptions(body))
            return invert_imp(body, x.antecedent)
        if isinstance(x, Or):
            comp = by_spine[spine + ("or",)]
            d = spliced(comp.spine)
            return invert_or(d, x.left, x.right, comp.conclusion, fuel=fuel, _trace=_trace)
        if isinstance(x, Bot):
            comp = by_spine[spine + ("bot",)]
            if _trace is not None:
                _trace.add(case="absurd", conclusion=comp.conclusion)
            return invert_bot(spliced(comp.spine), comp.conclusion, fuel=fuel)
        raise ExtractionError(f"no complementation reaches {x}")

    try:
        out = relabel(derive(arg.conclusion, ()))
    except KeyError as e:
        raise ExtractionError(f"missing complementation {e}") from None
    _final_checks(arg, out, w.fresh_prefix)
    return out


def _final_checks(arg: Argument, d: Argument, prefix: str):
    problems = [str(v) for v in check_nj(d)]
    if d.conclusion != arg.conclusion:
        problems.append(f"concludes {d.conclusion}, expected {arg.conclusion}")
    gamma = set(open_assumptions(arg))
    extra = set(open_assumptions(d)) - gamma
    if extra:
        problems.append("depends on " + ", ".join(sorted(map(str, extra))))
    names = set().union(*(atoms(f) for f in gamma | {arg.conclusion}))
    stray = {n for _, node in d.occurrences() for n in atoms(node.conclusion)
             if n.startswith(prefix) and n not in names}
    if stray:
        problems.append("fresh atoms survive: " + ", ".join(sorted(stray)))
    if problems:
        raise ExtractionError("; ".join(problems))


def extract_report(arg: Argument, w: ValidityWitness, *, fuel: int = DEFAULT_FUEL) -> tuple[Argument, dict]:
    """The derivation and a JSON-serialisable account of how it was obtained."""
    trace = ExtractionTrace()
    d = extract(arg, w, fuel=fuel, _trace=trace)
    report = {
        "conclusion": str(d.conclusion),
        "assumptions": sorted({str(f) for f in open_assumptions(d)}),
        "argument_assumptions": sorted({str(f) for f in open_assumptions(arg)}),
        "size": d.size,
        "steps": trace.steps,
    }
    return d, report
