"""Argument trees with discharge, and the structural classifiers built on them.

An argument is a tree of formula occurrences.  Inner nodes are inference
steps labelled with a :class:`Rule`; leaves are assumptions.  A step may
carry a discharge tag, and a leaf carrying the same tag is bound by the
nearest such step below it, provided the leaf sits in a premiss position
where that rule discharges.  Leaves without a binder are open.

Occurrences are addressed by coordinates: the tuple of premiss indices
on the way from the root (``()`` is the conclusion).

Premiss order follows the usual displays: ``ImpE`` takes ``[minor, major]``,
``OrE`` takes ``[major, left vertical, right vertical]``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

from .formula import Formula, as_formula, degree

__all__ = [
    "Rule", "Argument", "Coord", "leaf", "hole", "step",
    "WellFormednessError", "NotCanonicalError",
    "bindings", "binder_of", "check_discharges", "open_assumptions", "open_leaves",
    "holes", "discharge_context", "degree_of_argument", "role",
    "is_principal", "is_proper", "principal_path", "path_formulas",
    "is_placid", "is_canonical", "critical_subarguments", "proper_part",
]

Coord = tuple[int, ...]


class Rule(enum.Enum):
    AND_E_LEFT = "AndE_Left"
    AND_E_RIGHT = "AndE_Right"
    IMP_E = "ImpE"
    OR_E = "OrE"
    BOT_E = "BotE"
    AND_I = "AndI"
    OR_I_LEFT = "OrI_Left"
    OR_I_RIGHT = "OrI_Right"
    IMP_I = "ImpI"
    UNJUSTIFIED = "Unjustified"

    @property
    def is_elimination(self) -> bool:
        return self in _ELIMINATIONS

    @property
    def is_introduction(self) -> bool:
        return self in (Rule.AND_I, Rule.OR_I_LEFT, Rule.OR_I_RIGHT, Rule.IMP_I)

    @property
    def arity(self) -> int | None:
        """Fixed number of premisses, or ``None`` for unjustified steps (any positive number)."""
        return _ARITY.get(self)

    @property
    def major_index(self) -> int | None:
        if not self.is_elimination:
            return None
        return 1 if self is Rule.IMP_E else 0

    def is_horizontal(self, i: int) -> bool:
        return self is Rule.IMP_E and i == 0

    def is_vertical(self, i: int) -> bool:
        return self is Rule.OR_E and i in (1, 2)

    def discharges_at(self, i: int) -> bool:
        if self is Rule.UNJUSTIFIED:
            return True
        if self is Rule.IMP_I:
            return i == 0
        return self.is_vertical(i)

    @classmethod
    def lookup(cls, name: "str | Rule") -> "Rule":
        if isinstance(name, Rule):
            return name
        for r in cls:
            if r.value.lower() == name.lower() or r.name.lower() == name.lower():
                return r
        raise ValueError(f"unknown rule {name!r}")


_ELIMINATIONS = frozenset({Rule.AND_E_LEFT, Rule.AND_E_RIGHT, Rule.IMP_E, Rule.OR_E, Rule.BOT_E})
_ARITY = {
    Rule.AND_E_LEFT: 1, Rule.AND_E_RIGHT: 1, Rule.IMP_E: 2, Rule.OR_E: 3, Rule.BOT_E: 1,
    Rule.AND_I: 2, Rule.OR_I_LEFT: 1, Rule.OR_I_RIGHT: 1, Rule.IMP_I: 1,
}


class WellFormednessError(ValueError):
    pass


class NotCanonicalError(ValueError):
    pass


@dataclass(frozen=True, eq=True)
class Argument:
    """One occurrence together with the subargument it concludes.

    ``hole`` marks a placeholder leaf standing for a removed subargument.
    """
    conclusion: Formula
    rule: Rule | None = None
    premisses: tuple["Argument", ...] = ()
    discharges: str | None = None
    tag: str | None = None
    hole: bool = False

    def __post_init__(self):
        if self.rule is None:
            if self.premisses:
                raise WellFormednessError("a leaf cannot have premisses")
            if self.discharges is not None:
                raise WellFormednessError("only inference steps discharge")
            if self.hole and self.tag is not None:
                raise WellFormednessError("holes carry no discharge tag")
        else:
            if self.tag is not None or self.hole:
                raise WellFormednessError("only leaves carry tags or holes")
            n = self.rule.arity
            if (n is None and not self.premisses) or (n is not None and len(self.premisses) != n):
                want = "at least one" if n is None else str(n)
                raise WellFormednessError(f"{self.rule.value} takes {want} premisses, got {len(self.premisses)}")

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.conclusion, self.rule, self.premisses, self.discharges, self.tag, self.hole))
            object.__setattr__(self, "_hash", h)
        return h

    @property
    def is_leaf(self) -> bool:
        return self.rule is None

    def at(self, coord: Sequence[int]) -> "Argument":
        node = self
        for k, i in enumerate(coord):
            if node.is_leaf or not 0 <= i < len(node.premisses):
                raise IndexError(f"no occurrence at {tuple(coord)} (failed after {tuple(coord[:k])})")
            node = node.premisses[i]
        return node

    def replace(self, coord: Sequence[int], new: "Argument") -> "Argument":
        if not coord:
            return new
        i, rest = coord[0], coord[1:]
        if self.is_leaf or not 0 <= i < len(self.premisses):
            raise IndexError(f"no occurrence at {tuple(coord)}")
        ps = list(self.premisses)
        ps[i] = ps[i].replace(rest, new)
        return Argument(self.conclusion, self.rule, tuple(ps), self.discharges)

    def with_premisses(self, premisses: Sequence["Argument"]) -> "Argument":
        return Argument(self.conclusion, self.rule, tuple(premisses), self.discharges)

    def occurrences(self, _prefix: Coord = ()) -> Iterator[tuple[Coord, "Argument"]]:
        """All ``(coord, node)`` pairs in preorder, premisses left to right."""
        yield _prefix, self
        for i, p in enumerate(self.premisses):
            yield from p.occurrences(_prefix + (i,))

    def leaves(self) -> Iterator[tuple[Coord, "Argument"]]:
        return ((c, n) for c, n in self.occurrences() if n.is_leaf)

    def steps(self) -> Iterator[tuple[Coord, "Argument"]]:
        return ((c, n) for c, n in self.occurrences() if not n.is_leaf)

    @property
    def size(self) -> int:
        return 1 + sum(p.size for p in self.premisses)

    def __str__(self):
        from .textio import dump_argument
        return dump_argument(self)


def leaf(conclusion: Formula | str, tag: str | int | None = None) -> Argument:
    return Argument(as_formula(conclusion), tag=None if tag is None else str(tag))


def hole(conclusion: Formula | str) -> Argument:
    return Argument(as_formula(conclusion), hole=True)


def step(rule: Rule | str, conclusion: Formula | str, *premisses: Argument,
         discharges: str | int | None = None) -> Argument:
    return Argument(as_formula(conclusion), Rule.lookup(rule), tuple(premisses),
                    None if discharges is None else str(discharges))


# -- discharge ---------------------------------------------------------------

def bindings(arg: Argument) -> dict[Coord, Coord]:
    """Map each bound leaf coordinate to the coordinate of the step discharging it."""
    out: dict[Coord, Coord] = {}

    def walk(node: Argument, coord: Coord, env: dict[str, Coord]):
        if node.is_leaf:
            if node.tag is not None and node.tag in env:
                out[coord] = env[node.tag]
            return
        for i, p in enumerate(node.premisses):
            inner = env
            if node.discharges is not None and node.rule.discharges_at(i):
                inner = {**env, node.discharges: coord}
            walk(p, coord + (i,), inner)

    walk(arg, (), {})
    return out


def binder_of(arg: Argument, coord: Coord) -> Coord | None:
    return bindings(arg).get(tuple(coord))


def check_discharges(arg: Argument) -> list[str]:
    """Problems with discharge tags when *arg* is read as a complete argument.

    Every tagged leaf must be bound by a step on its own path to the conclusion.
    """
    bound = bindings(arg)
    step_tags = {n.discharges for _, n in arg.steps() if n.discharges is not None}
    problems = []
    for c, n in arg.leaves():
        if n.tag is None or c in bound:
            continue
        if n.tag in step_tags:
            problems.append(f"leaf {n.conclusion} at {list(c)}: tag {n.tag!r} binds outside its path")
        else:
            problems.append(f"leaf {n.conclusion} at {list(c)}: no step discharges tag {n.tag!r}")
    return problems


def open_leaves(arg: Argument) -> list[Coord]:
    bound = bindings(arg)
    return [c for c, n in arg.leaves() if not n.hole and c not in bound]


def open_assumptions(arg: Argument) -> list[Formula]:
    """Formulas of the undischarged assumptions, as a multiset in preorder."""
    return [arg.at(c).conclusion for c in open_leaves(arg)]


def holes(arg: Argument) -> list[Coord]:
    return [c for c, n in arg.leaves() if n.hole]


def discharge_context(arg: Argument, coord: Coord) -> list[tuple[str, Formula]]:
    """Discharges in force at *coord*: ``(tag, formula)`` pairs, innermost first.

    The discharged formula is read off the rule: the antecedent for ``ImpI``,
    the matching disjunct of the major premiss for ``OrE``.  Unjustified
    steps contribute nothing since they do not fix a formula.
    """
    ctx = []
    node = arg
    for i in coord:
        if node.discharges is not None and node.rule.discharges_at(i):
            f = None
            if node.rule is Rule.IMP_I and hasattr(node.conclusion, "antecedent"):
                f = node.conclusion.antecedent
            elif node.rule is Rule.OR_E:
                major = node.premisses[0].conclusion
                if hasattr(major, "left"):
                    f = major.left if i == 1 else major.right
            if f is not None:
                ctx.append((node.discharges, f))
        node = node.premisses[i]
    ctx.reverse()
    return ctx


def degree_of_argument(arg: Argument) -> int:
    """Maximum degree over the open assumptions and the conclusion."""
    return max([degree(f) for f in open_assumptions(arg)] + [degree(arg.conclusion)])


# -- classifiers --------------------------------------------------------------

def role(arg: Argument, coord: Coord) -> str:
    """Position of the occurrence in the step below it.

    One of ``"conclusion"``, ``"major"``, ``"horizontal"``, ``"vertical"``, ``"other"``.
    """
    if not coord:
        return "conclusion"
    parent = arg.at(coord[:-1])
    i = coord[-1]
    r = parent.rule
    if r.major_index == i:
        return "major"
    if r.is_horizontal(i):
        return "horizontal"
    if r.is_vertical(i):
        return "vertical"
    return "other"


def is_principal(arg: Argument, coord: Coord) -> bool:
    """The occurrence and everything below it, bar the conclusion, are major premisses of eliminations."""
    coord = tuple(coord)
    arg.at(coord)
    if not coord:
        return False
    node = arg
    for i in coord:
        if node.rule.major_index != i:
            return False
        node = node.premisses[i]
    return True


def _principal_leaf(arg: Argument) -> Coord | None:
    coord: Coord = ()
    node = arg
    while node.rule is not None and node.rule.is_elimination:
        i = node.rule.major_index
        coord += (i,)
        node = node.premisses[i]
    if coord and node.is_leaf and not node.hole:
        return coord
    return None


def is_proper(arg: Argument) -> bool:
    """Some assumption is principal.

    A single occurrence counts as proper: it is its own assumption and
    conclusion, joined by a path of length zero.
    """
    if arg.is_leaf:
        return not arg.hole
    return _principal_leaf(arg) is not None


def principal_path(arg: Argument) -> list[Coord] | None:
    """Coordinates from the principal assumption down to the conclusion, or None if improper."""
    if arg.is_leaf:
        return None if arg.hole else [()]
    c = _principal_leaf(arg)
    if c is None:
        return None
    return [c[:k] for k in range(len(c), -1, -1)]


def path_formulas(arg: Argument, path: Sequence[Coord]) -> list[Formula]:
    return [arg.at(c).conclusion for c in path]


def is_placid(arg: Argument, coord: Coord) -> bool:
    """Neither the occurrence nor anything below it is a horizontal minor premiss."""
    coord = tuple(coord)
    arg.at(coord)
    node = arg
    for i in coord:
        if node.rule.is_horizontal(i):
            return False
        node = node.premisses[i]
    return True


def _placid_verticals(arg: Argument) -> Iterator[Coord]:
    def walk(node: Argument, coord: Coord):
        for i, p in enumerate(node.premisses):
            if node.rule.is_horizontal(i):
                continue
            if node.rule.is_vertical(i):
                yield coord + (i,)
            yield from walk(p, coord + (i,))
    return walk(arg, ())


def is_canonical(arg: Argument) -> bool:
    """Proper, and every placid vertical minor premiss has a proper subargument."""
    if not is_proper(arg):
        return False
    return all(is_proper(arg.at(c)) for c in _placid_verticals(arg))


def critical_subarguments(arg: Argument) -> list[Coord]:
    """Coordinates of the maximal non-canonical subarguments ending in a horizontal minor premiss."""
    found: list[Coord] = []

    def walk(node: Argument, coord: Coord):
        for i, p in enumerate(node.premisses):
            c = coord + (i,)
            if node.rule.is_horizontal(i) and not is_canonical(p):
                found.append(c)
            else:
                walk(p, c)

    walk(arg, ())
    return found


def proper_part(arg: Argument) -> tuple[Argument, list[Coord]]:
    """Replace each critical subargument by a hole.

    Returns the holed argument and the coordinates of its proper
    assumptions: every remaining assumption, each of which is the principal
    assumption of the subargument for the minor premiss (or conclusion)
    where its chain of major premisses ends.
    """
    if not is_canonical(arg):
        raise NotCanonicalError("proper part is only defined for canonical arguments")
    holed = arg
    for c in critical_subarguments(arg):
        holed = holed.replace(c, hole(arg.at(c).conclusion))
    assumptions = [c for c, n in holed.leaves() if not n.hole]
    for c in assumptions:
        top = c
        while top and role(holed, top) == "major":
            top = top[:-1]
        assert is_proper(holed.at(top)), f"assumption at {c} is not principal in its subargument"
    return holed, assumptions
