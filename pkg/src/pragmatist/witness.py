"""Validity witnesses: packaged evidence that an argument is valid.

A :class:`Package` is a canonical argument together with witnesses for
each of its critical subarguments.  A :class:`ValidityWitness` for an
argument ``Gamma |- G`` answers complementations of that argument with
packages.  Its domain is declared explicitly: a finite table keyed by the
content hash of each complementation.

Checking recurses into critical subarguments, whose degree must drop at
every level, so the recursion is well founded.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .argument import (
    Argument, Coord, critical_subarguments, degree_of_argument, is_canonical,
    leaf, open_assumptions,
)
from .build import and_l, and_r, bot_e, imp_e, imp_i, or_e, unjustified
from .complement import (
    DEFAULT_FRESH_PREFIX, Complementation, FreshAtoms, complementation_from_sexpr,
    dump_complementation, proof_case_complementation,
)
from .formula import And, Bot, Formula, Imp, Or, atoms, degree
from .ndcalc import check_nj
from .textio import SExpr, TreeSyntaxError, argument_from_sexpr, dump_argument, read_one

__all__ = [
    "Package", "ValidityWitness", "Verdict", "ValidityReport",
    "WitnessUndefined", "WellFoundednessError",
    "check_narrow_validity", "check_validity", "search_witness",
    "dump_witness", "load_witness", "witness_from_sexpr",
]


class WitnessUndefined(KeyError):
    """The witness has no package for the queried complementation."""


class WellFoundednessError(AssertionError):
    """A recursive call did not strictly lower the degree measure."""


@dataclass(frozen=True)
class Package:
    """A canonical argument plus witnesses for its critical subarguments, by coordinate."""
    canonical: Argument
    sub_witnesses: Mapping[Coord, "ValidityWitness"] = field(default_factory=dict)

    @property
    def conclusion(self) -> Formula:
        return self.canonical.conclusion


@dataclass(frozen=True)
class ValidityWitness:
    argument: Argument
    entries: Mapping[str, tuple[Complementation, Package]]
    fresh_prefix: str = DEFAULT_FRESH_PREFIX

    @property
    def domain(self) -> tuple[str, ...]:
        return tuple(self.entries)

    def respond(self, comp: Complementation) -> Package:
        try:
            return self.entries[comp.key()][1]
        except KeyError:
            raise WitnessUndefined(
                f"no package for the complementation ending in {comp.conclusion} "
                f"(spine {'/'.join(comp.spine) or 'empty'})") from None

    def complementations(self) -> list[Complementation]:
        return proof_case_complementation(self.argument, FreshAtoms(self.fresh_prefix))

    @classmethod
    def from_packages(cls, argument: Argument,
                      packages: Sequence[Package | Callable[[Complementation], Package]],
                      fresh_prefix: str = DEFAULT_FRESH_PREFIX) -> "ValidityWitness":
        """Pair *packages* with the proof-case complementations of *argument*, in order.

        A callable entry receives its complementation, which is convenient
        when the package must mention the fresh atom.
        """
        comps = proof_case_complementation(argument, FreshAtoms(fresh_prefix))
        if len(comps) != len(packages):
            raise ValueError(f"{len(comps)} complementations but {len(packages)} packages")
        entries = {}
        for comp, pkg in zip(comps, packages):
            entries[comp.key()] = (comp, pkg(comp) if callable(pkg) else pkg)
        return cls(argument, entries, fresh_prefix)

    def rebase(self, argument: Argument) -> "ValidityWitness":
        """The same responses for another argument with the same assumptions and conclusion."""
        if (argument.conclusion != self.argument.conclusion
                or set(open_assumptions(argument)) != set(open_assumptions(self.argument))):
            raise ValueError("rebase needs the same assumptions and conclusion")
        entries = {k: (Complementation.from_extension(argument, c.extension, c.fresh_atoms), p)
                   for k, (c, p) in self.entries.items()}
        return ValidityWitness(argument, entries, self.fresh_prefix)


# -- checking -------------------------------------------------------------------

@dataclass
class Verdict:
    complementation: Complementation
    problems: list[str]

    @property
    def ok(self) -> bool:
        return not self.problems


@dataclass
class ValidityReport:
    argument: Argument
    verdicts: list[Verdict]

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts)

    def problems(self) -> list[str]:
        out = []
        for v in self.verdicts:
            where = "/".join(v.complementation.spine) or "identity"
            out += [f"[{where}] {p}" for p in v.problems]
        return out


def check_narrow_validity(pkg: Package, degree_bound: int | None = None, *,
                          _measure: int | None = None) -> list[str]:
    """Problems that keep *pkg* from being narrowly valid; empty when it is.

    The critical subarguments must be of degree below *degree_bound*
    (default: the degree of the canonical argument) and valid by their
    witnesses.  The proper part must consist of genuine rule instances.
    """
    arg = pkg.canonical
    if not is_canonical(arg):
        return ["argument is not canonical"]
    bound = degree_of_argument(arg) if degree_bound is None else degree_bound
    crits = critical_subarguments(arg)
    # rule instances are demanded of the proper part only; discharges inside criticals still count
    out = [f"proper part: {v}" for v in check_nj(arg)
           if not any(v.coord[:len(c)] == c for c in crits)]
    for c in pkg.sub_witnesses:
        if c not in crits:
            out.append(f"witness given at {list(c)}, which is not a critical position")
    for c in crits:
        sub = arg.at(c)
        d = degree_of_argument(sub)
        if d >= bound:
            out.append(f"critical subargument at {list(c)} has degree {d}, not below {bound}")
            continue
        w = pkg.sub_witnesses.get(c)
        if w is None:
            out.append(f"critical subargument at {list(c)} has no witness")
            continue
        if w.argument != sub:
            out.append(f"witness at {list(c)} is for a different argument")
            continue
        if _measure is not None and d >= _measure:
            raise WellFoundednessError(f"degree {d} at {list(c)} does not drop below {_measure}")
        report = check_validity(sub, w, _measure=d)
        out += [f"critical at {list(c)}: {p}" for p in report.problems()]
    return out


def check_validity(arg: Argument, w: ValidityWitness,
                   comps: Iterable[Complementation] | None = None, *,
                   _measure: int | None = None) -> ValidityReport:
    """Query *w* on each complementation (default: the proof-case ones) and judge the answers."""
    if w.argument != arg:
        raise ValueError("witness belongs to a different argument")
    measure = degree_of_argument(arg)
    if _measure is not None and measure > _measure:
        raise WellFoundednessError(f"argument degree {measure} exceeds the measure {_measure}")
    comps = w.complementations() if comps is None else list(comps)
    gamma = set(open_assumptions(arg))
    verdicts = []
    for comp in comps:
        try:
            pkg = w.respond(comp)
        except WitnessUndefined as e:
            verdicts.append(Verdict(comp, [str(e.args[0])]))
            continue
        problems = []
        if pkg.conclusion != comp.conclusion:
            problems.append(f"package concludes {pkg.conclusion}, expected {comp.conclusion}")
        leak = sorted({str(f) for f in open_assumptions(pkg.canonical)} - {str(f) for f in gamma | comp.delta})
        if leak:
            problems.append("assumptions outside the argument's and the auxiliary ones: " + ", ".join(leak))
        else:
            problems += check_narrow_validity(pkg, _measure=measure)
        verdicts.append(Verdict(comp, problems))
    return ValidityReport(arg, verdicts)


# -- text format ----------------------------------------------------------------

def dump_witness(w: ValidityWitness, indent: int = 0, *, nested: bool = False) -> str:
    """Witness file text.  A nested witness omits its argument: it is the critical subtree."""
    pad = " " * indent
    lines = [f"{pad}(witness"]
    if w.fresh_prefix != DEFAULT_FRESH_PREFIX:
        lines.append(f"{pad}  (prefix {w.fresh_prefix})")
    if not nested:
        lines.append(f"{pad}  (argument\n{dump_argument(w.argument, indent + 4)})")
    lines.append(f"{pad}  (domain {' '.join(w.domain)})")
    for comp, pkg in w.entries.values():
        lines.append(f"{pad}  (entry")
        lines.append(dump_complementation(comp, indent + 4))
        lines.append(f"{pad}    (package")
        lines.append(f"{pad}      (canonical\n{dump_argument(pkg.canonical, indent + 8)})")
        for c, sw in sorted(pkg.sub_witnesses.items()):
            lines.append(f"{pad}      (critical {' '.join(map(str, c))}")
            lines.append(dump_witness(sw, indent + 8, nested=True) + ")")
        lines[-1] += "))"
    lines[-1] += ")"
    return "\n".join(lines)


def _single(node: SExpr, head: str) -> Argument:
    forms = node.one(head).lists()
    if len(forms) != 1:
        raise TreeSyntaxError(f"({head} ...) holds exactly one argument", node.pos)
    return argument_from_sexpr(forms[0])


def witness_from_sexpr(node: SExpr, argument: Argument | None = None) -> ValidityWitness:
    if node.head != "witness":
        raise TreeSyntaxError(f"expected (witness ...), found ({node.head} ...)", node.pos)
    if node.lists("argument"):
        argument = _single(node, "argument")
    elif argument is None:
        raise TreeSyntaxError("top-level witness needs an (argument ...)", node.pos)
    prefix = node.lists("prefix")
    fresh_prefix = prefix[0].words()[0] if prefix else DEFAULT_FRESH_PREFIX
    entries = {}
    for e in node.lists("entry"):
        comp = complementation_from_sexpr(e.one("complementation"), argument)
        p = e.one("package")
        canonical = _single(p, "canonical")
        subs = {}
        for cr in p.lists("critical"):
            try:
                coord = tuple(int(x) for x in cr.words())
                sub = canonical.at(coord)
            except (ValueError, IndexError):
                raise TreeSyntaxError(f"bad critical coordinate {' '.join(cr.words())}", cr.pos) from None
            subs[coord] = witness_from_sexpr(cr.one("witness"), sub)
        entries[comp.key()] = (comp, Package(canonical, subs))
    declared = node.lists("domain")
    if declared and set(declared[0].words()) != set(entries):
        raise TreeSyntaxError("declared domain does not match the entries", node.pos)
    return ValidityWitness(argument, entries, fresh_prefix)


def load_witness(text: str) -> ValidityWitness:
    return witness_from_sexpr(read_one(text, "witness"))


# -- bounded search -------------------------------------------------------------

Hyps = tuple[tuple[Formula, "str | None"], ...]


def _uses(arg: Argument, tag: str) -> bool:
    return any(n.tag == tag for _, n in arg.leaves())


def _representative(gamma: frozenset, goal: Formula) -> Argument:
    """Some argument with exactly these assumptions and this conclusion."""
    if gamma:
        return unjustified(goal, *(leaf(f) for f in sorted(gamma, key=str)))
    return unjustified(goal, leaf(goal, "h"), tag="h")


class _Searcher:
    """Focused backward search for packages, memoized on sequents."""

    def __init__(self, depth: int, prefix: str):
        self.depth = depth
        self.prefix = prefix
        self.memo: dict[tuple[frozenset, Formula], ValidityWitness | None] = {}

    def witness(self, gamma: frozenset, goal: Formula) -> ValidityWitness | None:
        key = (gamma, goal)
        if key in self.memo:
            return self.memo[key]
        self.memo[key] = None
        arg = _representative(gamma, goal)
        comps = proof_case_complementation(arg, FreshAtoms(self.prefix))
        packages = []
        for comp in comps:
            hyps = tuple((f, None) for f in sorted(gamma | comp.delta, key=str))
            pkg = self.package(hyps, comp.conclusion)
            if pkg is None:
                return None
            packages.append(pkg)
        w = ValidityWitness.from_packages(arg, packages, self.prefix)
        self.memo[key] = w
        return w

    def package(self, hyps: Hyps, goal: Formula) -> Package | None:
        bounds = sorted({degree(f) for f, _ in hyps} | {degree(goal)}, reverse=True)
        for depth in range(self.depth + 1):
            for bound in bounds:
                for cand in self.chains(hyps, goal, depth, bound):
                    pkg = self.make_package(cand)
                    if pkg is not None and not check_narrow_validity(pkg):
                        return pkg
        return None

    def make_package(self, cand: Argument) -> Package | None:
        subs = {}
        for c in critical_subarguments(cand):
            sub = cand.at(c)
            w = self.memo.get((frozenset(open_assumptions(sub)), sub.conclusion))
            if w is None:
                return None
            subs[c] = w.rebase(sub)
        return Package(cand, subs)

    def chains(self, hyps: Hyps, goal: Formula, depth: int, bound: int) -> Iterator[Argument]:
        """Proper arguments for *goal*: a chain of eliminations from one hypothesis."""
        for f, t in hyps:
            if f == goal:
                yield leaf(f, t)
                break
        if depth == 0:
            return
        for f, t in hyps:
            yield from self.eliminate(leaf(f, t), hyps, goal, depth, bound)

    def eliminate(self, tree: Argument, hyps: Hyps, goal: Formula, depth: int, bound: int) -> Iterator[Argument]:
        x = tree.conclusion
        if x == goal and not tree.is_leaf:
            yield tree
            return
        if depth == 0:
            return
        if isinstance(x, And):
            yield from self.eliminate(and_l(tree), hyps, goal, depth - 1, bound)
            yield from self.eliminate(and_r(tree), hyps, goal, depth - 1, bound)
        elif isinstance(x, Imp):
            for minor in self.minors(hyps, x.antecedent, depth - 1, bound):
                yield from self.eliminate(imp_e(minor, tree), hyps, goal, depth - 1, bound)
        elif isinstance(x, Or):
            tag = f"v{sum(1 for _, t in hyps if t is not None) + 1}"
            rest = tuple(h for h in hyps if h[0] != x)
            cases = []
            for d in (x.left, x.right):
                inner = ((d, tag),) + rest
                found = next((v for v in self.chains(inner, goal, depth - 1, bound) if _uses(v, tag)), None)
                if found is None:
                    return
                cases.append(found)
            yield or_e(tree, cases[0], cases[1], tag)
        elif isinstance(x, Bot):
            yield bot_e(tree, goal)

    def minors(self, hyps: Hyps, x: Formula, depth: int, bound: int) -> Iterator[Argument]:
        yield from self.chains(hyps, x, depth, bound)
        crit = self.critical(hyps, x, bound)
        if crit is not None:
            yield crit

    def critical(self, hyps: Hyps, x: Formula, bound: int) -> Argument | None:
        if degree(x) >= bound:
            return None
        theta = []
        for f, t in hyps:
            if degree(f) < bound and all(f != g for g, _ in theta):
                theta.append((f, t))
        if self.witness(frozenset(f for f, _ in theta), x) is None:
            return None
        if theta:
            return unjustified(x, *(leaf(f, t) for f, t in theta))
        if isinstance(x, Imp):
            return imp_i(unjustified(x.consequent, leaf(x.antecedent, "h")), x.antecedent, "h")
        return unjustified(x, leaf(x, "h"), tag="h")


def search_witness(arg: Argument, depth_bound: int = 4, atom_bound: int = 6,
                   fresh_prefix: str = DEFAULT_FRESH_PREFIX) -> ValidityWitness | None:
    """Look for a witness by bounded search; ``None`` if none is found within the bounds.

    *depth_bound* caps the number of elimination steps in each chain and
    *atom_bound* the number of distinct atoms in the argument's sequent.
    A witness that is returned has passed :func:`check_validity`.
    """
    gamma = frozenset(open_assumptions(arg))
    names = set().union(*(atoms(f) for f in gamma | {arg.conclusion}))
    if len(names) > atom_bound:
        return None
    w = _Searcher(depth_bound, fresh_prefix).witness(gamma, arg.conclusion)
    if w is None:
        return None
    w = w.rebase(arg)
    return w if check_validity(arg, w).ok else None
