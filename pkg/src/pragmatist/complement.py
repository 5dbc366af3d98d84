"""Complementations: extending an argument below its conclusion by eliminations down to an atom.

The proof-case complementations are the particular extensions the
extraction procedure queries a witness on, one per connective:

* ``A & B``: two complementations, one through each projection;
* ``A -> B``: ``ImpE`` with the minor premiss ``A`` assumed;
* ``A | B``: a terminal ``OrE`` into a fresh atom ``C`` whose cases use the
  assumptions ``A -> C`` and ``B -> C``;
* ``_|_``: a terminal ``BotE`` into a fresh atom.

Fresh atoms live in the ``#c0, #c1, ...`` namespace.  The supply is an
immutable value passed along explicitly, never a global counter.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator

from .argument import (
    Argument, Rule, critical_subarguments, degree_of_argument, is_canonical,
    leaf, open_assumptions, open_leaves, principal_path, step,
)
from .formula import BOT, And, Atom, Bot, Formula, Imp, Or, atoms, degree, is_atomic
from .ndcalc import check_nj, rename_apart, tags_in
from .textio import SExpr, TreeSyntaxError, argument_from_sexpr, dump_argument, parse

__all__ = [
    "FreshAtoms", "Complementation", "ComplementationError",
    "complement_atomic", "proof_case_complementation", "check_complementation",
    "enumerate_complementations", "dump_complementation", "complementation_from_sexpr",
    "DEFAULT_FRESH_PREFIX",
]

DEFAULT_FRESH_PREFIX = "#c"
_CASE_TAG = "c"


class ComplementationError(ValueError):
    pass


@dataclass(frozen=True)
class FreshAtoms:
    """Supply of atoms ``prefix0, prefix1, ...`` skipping every name in ``avoid``."""
    prefix: str = DEFAULT_FRESH_PREFIX
    avoid: frozenset = frozenset()
    next_index: int = 0
    limit: int | None = None

    def take(self) -> tuple[Atom, "FreshAtoms"]:
        k = self.next_index
        while f"{self.prefix}{k}" in self.avoid:
            k += 1
        if self.limit is not None and k >= self.limit:
            raise ComplementationError("fresh atom supply exhausted")
        return Atom(f"{self.prefix}{k}"), replace(self, next_index=k + 1)

    @classmethod
    def avoiding(cls, formulas: Iterable[Formula], prefix: str = DEFAULT_FRESH_PREFIX) -> "FreshAtoms":
        names = set()
        for f in formulas:
            names |= atoms(f)
        return cls(prefix, frozenset(names))


@dataclass(frozen=True)
class Complementation:
    """An extension below the conclusion ``G`` of ``base``.

    ``extension`` has ``G`` as an open leaf at the top of its principal
    path and an atomic conclusion.  ``introduced[i]`` lists the auxiliary
    assumptions added by the ``i``-th step of the spine; ``auxiliary`` is
    their union in order of introduction.
    """
    base: Argument
    extension: Argument
    spine: tuple[str, ...] = ()
    introduced: tuple[tuple[Formula, ...], ...] = ()
    fresh_atoms: tuple[str, ...] = ()
    _key: str = field(default="", compare=False, repr=False)

    @property
    def conclusion(self) -> Formula:
        return self.extension.conclusion

    @property
    def goal(self) -> Formula:
        return self.base.conclusion

    @property
    def auxiliary(self) -> tuple[Formula, ...]:
        seen = []
        for fs in self.introduced:
            for f in fs:
                if f not in seen:
                    seen.append(f)
        return tuple(seen)

    @property
    def gamma(self) -> frozenset:
        return frozenset(open_assumptions(self.base))

    @property
    def delta(self) -> frozenset:
        return frozenset(self.auxiliary)

    def delta_star(self, i: int = -1) -> frozenset:
        """Auxiliary assumptions except those introduced at spine step *i* (default: the last)."""
        if not self.introduced:
            return frozenset()
        i %= len(self.introduced)
        return frozenset(f for k, fs in enumerate(self.introduced) if k != i for f in fs)

    def key(self) -> str:
        """Content hash of the extension and its bookkeeping (the base is not included)."""
        if not self._key:
            text = dump_complementation(self)
            object.__setattr__(self, "_key", hashlib.sha256(text.encode()).hexdigest())
        return self._key

    def full(self) -> Argument:
        """The complete argument: ``base`` plugged in at the principal leaf ``G``."""
        path = principal_path(self.extension)
        base = rename_apart(self.base, tags_in(self.extension))
        return self.extension.replace(path[0], base)

    @classmethod
    def from_extension(cls, base: Argument, extension: Argument, fresh: Iterable[str] = ()) -> "Complementation":
        path = principal_path(extension)
        if path is None:
            raise ComplementationError("extension is improper: no principal assumption")
        spine, introduced = [], []
        for c in path[1:]:
            node = extension.at(c)
            r = node.rule
            if r is Rule.AND_E_LEFT:
                spine.append("and_left"); introduced.append(())
            elif r is Rule.AND_E_RIGHT:
                spine.append("and_right"); introduced.append(())
            elif r is Rule.IMP_E:
                spine.append("imp"); introduced.append(tuple(open_assumptions(node.premisses[0])))
            elif r is Rule.OR_E:
                spine.append("or")
                sub = node.with_premisses((leaf(node.premisses[0].conclusion),) + node.premisses[1:])
                introduced.append(tuple(f for k, f in zip(open_leaves(sub), open_assumptions(sub)) if k != (0,)))
            elif r is Rule.BOT_E:
                spine.append("bot"); introduced.append(())
            else:
                raise ComplementationError(f"{r.value} on the principal path of an extension")
        return cls(base, extension, tuple(spine), tuple(introduced), tuple(fresh))


def complement_atomic(arg: Argument) -> Complementation:
    """An argument with atomic conclusion is its own complementation."""
    if not is_atomic(arg.conclusion):
        raise ComplementationError(f"conclusion {arg.conclusion} is not atomic")
    return Complementation(arg, leaf(arg.conclusion))


def proof_case_complementation(arg: Argument, supply: FreshAtoms | None = None) -> list[Complementation]:
    """The complementations the extraction uses, in spine order (left projection first)."""
    goal = arg.conclusion
    if is_atomic(goal):
        return [complement_atomic(arg)]
    if supply is None:
        supply = FreshAtoms.avoiding(open_assumptions(arg) + [goal])
    else:
        supply = replace(supply, avoid=supply.avoid | FreshAtoms.avoiding(open_assumptions(arg) + [goal]).avoid)
    out: list[Complementation] = []

    def go(tree: Argument, spine: tuple, introduced: tuple, supply: FreshAtoms) -> FreshAtoms:
        x = tree.conclusion
        if isinstance(x, Atom):
            out.append(Complementation(arg, tree, spine, introduced))
        elif isinstance(x, And):
            supply = go(step(Rule.AND_E_LEFT, x.left, tree), spine + ("and_left",), introduced + ((),), supply)
            supply = go(step(Rule.AND_E_RIGHT, x.right, tree), spine + ("and_right",), introduced + ((),), supply)
        elif isinstance(x, Imp):
            ext = step(Rule.IMP_E, x.consequent, leaf(x.antecedent), tree)
            supply = go(ext, spine + ("imp",), introduced + ((x.antecedent,),), supply)
        elif isinstance(x, Or):
            c, supply = supply.take()
            ac, bc = Imp(x.left, c), Imp(x.right, c)
            ext = step(Rule.OR_E, c, tree,
                       step(Rule.IMP_E, c, leaf(x.left, _CASE_TAG), leaf(ac)),
                       step(Rule.IMP_E, c, leaf(x.right, _CASE_TAG), leaf(bc)),
                       discharges=_CASE_TAG)
            out.append(Complementation(arg, ext, spine + ("or",), introduced + ((ac, bc),), (c.name,)))
        else:
            c, supply = supply.take()
            out.append(Complementation(arg, step(Rule.BOT_E, c, tree), spine + ("bot",), introduced + ((),), (c.name,)))
        return supply

    go(leaf(goal), (), (), supply)
    return out


def enumerate_complementations(arg: Argument, targets: Iterable[str] = (), depth: int = 8,
                               supply: FreshAtoms | None = None) -> Iterator[Complementation]:
    """Bounded enumeration of complementations beyond the proof-case ones.

    Terminal ``OrE`` and ``BotE`` steps may end in a fresh atom or in any
    atom named in *targets*; a case whose disjunct already is the target
    atom needs no auxiliary assumption.  Spines longer than *depth* are cut.
    """
    goal = arg.conclusion
    if is_atomic(goal):
        yield complement_atomic(arg)
        return
    if supply is None:
        supply = FreshAtoms.avoiding(open_assumptions(arg) + [goal])
    fresh, _ = supply.take()
    ends = [fresh] + [Atom(t) for t in targets if Atom(t) != fresh]

    def go(tree: Argument, n: int) -> Iterator[Argument]:
        x = tree.conclusion
        if isinstance(x, Atom):
            yield tree
            return
        if n == 0:
            return
        if isinstance(x, And):
            yield from go(step(Rule.AND_E_LEFT, x.left, tree), n - 1)
            yield from go(step(Rule.AND_E_RIGHT, x.right, tree), n - 1)
        elif isinstance(x, Imp):
            yield from go(step(Rule.IMP_E, x.consequent, leaf(x.antecedent), tree), n - 1)
        elif isinstance(x, Or):
            for c in ends:
                cases = []
                for d in (x.left, x.right):
                    cases.append(leaf(d, _CASE_TAG) if d == c else
                                 step(Rule.IMP_E, c, leaf(d, _CASE_TAG), leaf(Imp(d, c))))
                yield step(Rule.OR_E, c, tree, *cases, discharges=_CASE_TAG)
        else:
            for c in ends:
                yield step(Rule.BOT_E, c, tree)

    for ext in go(leaf(goal), depth):
        used = tuple(a for a in [fresh.name] if a in atoms(ext.conclusion))
        yield Complementation.from_extension(arg, ext, used)


def check_complementation(comp: Complementation) -> list[str]:
    """Violations of the complementation contract; empty when it holds."""
    ext, base = comp.extension, comp.base
    out = []
    path = principal_path(ext)
    if path is None:
        out.append("extension has no principal assumption")
    else:
        top = ext.at(path[0])
        if top.conclusion != comp.goal:
            out.append(f"principal assumption is {top.conclusion}, expected the conclusion {comp.goal}")
        if path[0] not in open_leaves(ext):
            out.append("principal assumption is discharged")
    if not is_atomic(comp.conclusion):
        out.append(f"conclusion {comp.conclusion} is not atomic")
    if not is_canonical(ext):
        out.append("extension is not canonical")
    if critical_subarguments(ext):
        out.append("extension has critical subarguments")
    out.extend(f"extension step {v}" for v in check_nj(ext))
    bound = degree_of_argument(base)
    if degree_of_argument(ext) > bound:
        out.append(f"extension degree {degree_of_argument(ext)} exceeds the degree {bound} of the argument")
    if path is not None:
        others = [f for c, f in zip(open_leaves(ext), open_assumptions(ext)) if c != path[0]]
        if set(others) != set(comp.auxiliary):
            out.append(f"auxiliary assumptions {_fmt(comp.auxiliary)} differ from the extension's {_fmt(others)}")
    if comp.fresh_atoms:
        taken = set()
        for f in list(comp.gamma) + [comp.goal] + list(comp.delta_star(-1)):
            taken |= atoms(f)
        for a in comp.fresh_atoms:
            if a in taken:
                out.append(f"fresh atom {a} occurs in the assumptions or the conclusion")
            if a not in atoms(comp.conclusion):
                out.append(f"fresh atom {a} is not the conclusion")
    return out


def _fmt(fs) -> str:
    return "{" + ", ".join(sorted(str(f) for f in fs)) + "}"


# -- text format ---------------------------------------------------------------

def dump_complementation(comp: Complementation, indent: int = 0) -> str:
    pad = " " * indent
    lines = [f"{pad}(complementation"]
    for f in comp.auxiliary:
        lines.append(f"{pad}  (delta {f})")
    for a in comp.fresh_atoms:
        lines.append(f"{pad}  (fresh {a})")
    lines.append(f"{pad}  (extension\n{dump_argument(comp.extension, indent + 4)}))")
    return "\n".join(lines)


def complementation_from_sexpr(node: SExpr, base: Argument) -> Complementation:
    if node.head != "complementation":
        raise TreeSyntaxError(f"expected (complementation ...), found ({node.head} ...)", node.pos)
    ext_forms = node.one("extension").lists()
    if len(ext_forms) != 1:
        raise TreeSyntaxError("(extension ...) holds exactly one argument", node.pos)
    ext = argument_from_sexpr(ext_forms[0])
    fresh = tuple(x.raw for x in node.lists("fresh"))
    try:
        comp = Complementation.from_extension(base, ext, fresh)
        declared = [parse(x.raw) for x in node.lists("delta")]
    except (ComplementationError, ValueError) as e:
        raise TreeSyntaxError(f"bad complementation: {e}", node.pos) from None
    if set(declared) != set(comp.auxiliary):
        raise TreeSyntaxError(f"declared delta {_fmt(declared)} does not match the extension's {_fmt(comp.auxiliary)}", node.pos)
    return comp
