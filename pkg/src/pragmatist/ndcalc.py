"""Natural deduction (propositional NJ): rule checking and normalization.

A derivation is an :class:`~pragmatist.argument.Argument` in which every step
instantiates one of the introduction or elimination rules.  Normalization
contracts detours (an introduction or ``BotE`` feeding the major premiss of
an elimination), permutes eliminations up through ``OrE`` and drops ``OrE``
steps whose case branch discharges nothing.  The strategy is leftmost
innermost and deterministic.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .argument import Argument, Coord, Rule, bindings, hole, open_assumptions
from .formula import BOT, And, Formula, Imp, Or, subformulas

__all__ = [
    "Violation", "NormalizationError", "check_nj", "is_derivation", "is_normal",
    "normalize", "relabel", "freshen", "rename_apart", "substitute_leaves",
    "tags_in", "subformula_violations", "DEFAULT_FUEL",
]

DEFAULT_FUEL = 100_000


@dataclass(frozen=True)
class Violation:
    coord: Coord
    rule: str
    message: str

    def __str__(self):
        return f"{self.rule} at {list(self.coord)}: {self.message}"


class NormalizationError(RuntimeError):
    pass


def check_nj(arg: Argument) -> list[Violation]:
    """Every step checked against its rule schema; an empty list means a derivation."""
    bound = bindings(arg)
    by_binder: dict[Coord, list[Coord]] = {}
    for lc, bc in bound.items():
        by_binder.setdefault(bc, []).append(lc)
    out: list[Violation] = []
    for c, node in arg.occurrences():
        if node.hole:
            out.append(Violation(c, "hole", "derivations contain no holes"))
        if node.is_leaf:
            continue
        name = node.rule.value

        def bad(msg: str):
            out.append(Violation(c, name, msg))

        discharged = [(lc, arg.at(lc).conclusion) for lc in by_binder.get(c, [])]
        ps = [p.conclusion for p in node.premisses]
        concl = node.conclusion
        r = node.rule
        if node.discharges is not None and r not in (Rule.IMP_I, Rule.OR_E):
            bad(f"rule discharges nothing but carries tag {node.discharges!r}")
        if r is Rule.UNJUSTIFIED:
            bad("unjustified step")
        elif r is Rule.AND_I:
            if concl != And(ps[0], ps[1]):
                bad(f"expected {And(ps[0], ps[1])}, got {concl}")
        elif r in (Rule.AND_E_LEFT, Rule.AND_E_RIGHT):
            if not isinstance(ps[0], And):
                bad(f"major premiss {ps[0]} is not a conjunction")
            elif concl != (ps[0].left if r is Rule.AND_E_LEFT else ps[0].right):
                bad(f"{concl} is not the {'left' if r is Rule.AND_E_LEFT else 'right'} conjunct of {ps[0]}")
        elif r in (Rule.OR_I_LEFT, Rule.OR_I_RIGHT):
            side = "left" if r is Rule.OR_I_LEFT else "right"
            if not isinstance(concl, Or) or getattr(concl, side) != ps[0]:
                bad(f"{concl} is not a disjunction with {ps[0]} on the {side}")
        elif r is Rule.IMP_I:
            if not isinstance(concl, Imp) or concl.consequent != ps[0]:
                bad(f"{concl} is not an implication with consequent {ps[0]}")
            else:
                for lc, f in discharged:
                    if f != concl.antecedent:
                        bad(f"discharges {f} at {list(lc)}, expected {concl.antecedent}")
        elif r is Rule.IMP_E:
            if not isinstance(ps[1], Imp):
                bad(f"major premiss {ps[1]} is not an implication")
            elif ps[1] != Imp(ps[0], concl):
                bad(f"from {ps[0]} and {ps[1]} the rule yields {ps[1].consequent}, not {concl}"
                    if ps[1].antecedent == ps[0] else
                    f"minor premiss {ps[0]} does not match antecedent of {ps[1]}")
        elif r is Rule.OR_E:
            if not isinstance(ps[0], Or):
                bad(f"major premiss {ps[0]} is not a disjunction")
            else:
                for i, want in ((1, ps[0].left), (2, ps[0].right)):
                    if ps[i] != concl:
                        bad(f"case {i} concludes {ps[i]}, expected {concl}")
                    mine = [(lc, f) for lc, f in discharged if lc[len(c)] == i]
                    if not mine:
                        bad(f"case {i} discharges no occurrence of {want}")
                    for lc, f in mine:
                        if f != want:
                            bad(f"case {i} discharges {f} at {list(lc)}, expected {want}")
        elif r is Rule.BOT_E:
            if ps[0] != BOT:
                bad(f"premiss {ps[0]} is not absurdity")
    return out


def is_derivation(arg: Argument) -> bool:
    return not check_nj(arg)


def _major(node: Argument) -> Argument | None:
    if node.rule is None or not node.rule.is_elimination:
        return None
    return node.premisses[node.rule.major_index]


def _is_detour(node: Argument) -> bool:
    m = _major(node)
    return m is not None and m.rule is not None and (
        m.rule.is_introduction or m.rule in (Rule.BOT_E, Rule.OR_E))


def is_normal(d: Argument) -> bool:
    """No introduction, ``BotE`` or ``OrE`` consequence is the major premiss of an elimination."""
    return not any(_is_detour(n) for _, n in d.steps())


# -- tag bookkeeping ---------------------------------------------------------

def tags_in(arg: Argument) -> set[str]:
    out = set()
    for _, n in arg.occurrences():
        if n.discharges is not None:
            out.add(n.discharges)
        if n.tag is not None:
            out.add(n.tag)
    return out


class _Supply:
    def __init__(self, used):
        self.used = set(used)
        self.counter = itertools.count(1)

    def fresh(self) -> str:
        while True:
            t = f"t{next(self.counter)}"
            if t not in self.used:
                self.used.add(t)
                return t


def freshen(arg: Argument, supply) -> Argument:
    """Give every step in *arg* a fresh discharge tag, keeping bindings intact."""
    def walk(node: Argument, env: dict[str, str]) -> Argument:
        if node.is_leaf:
            if node.tag is not None and node.tag in env:
                return Argument(node.conclusion, tag=env[node.tag])
            return node
        new_tag = None if node.discharges is None else supply.fresh()
        ps = []
        for i, p in enumerate(node.premisses):
            inner = env
            if node.discharges is not None and node.rule.discharges_at(i):
                inner = {**env, node.discharges: new_tag}
            ps.append(walk(p, inner))
        return Argument(node.conclusion, node.rule, tuple(ps), new_tag)
    return walk(arg, {})


def rename_apart(arg: Argument, avoid) -> Argument:
    """Rename the step tags of *arg* away from the tags in *avoid*."""
    return freshen(arg, _Supply(set(avoid) | tags_in(arg)))


def relabel(arg: Argument) -> Argument:
    """Canonical tags: binders numbered 1, 2, ... in preorder; non-binding steps lose their tag."""
    bound = bindings(arg)
    binders = sorted(set(bound.values()))  # lexicographic order on coordinates is preorder
    keep = {n.tag for c, n in arg.leaves() if n.tag is not None and c not in bound}
    numbers = (str(k) for k in itertools.count(1) if str(k) not in keep)
    name = {c: next(numbers) for c in binders}

    def walk(node: Argument, coord: Coord) -> Argument:
        if node.is_leaf:
            if coord in bound:
                return Argument(node.conclusion, tag=name[bound[coord]])
            return node
        ps = tuple(walk(p, coord + (i,)) for i, p in enumerate(node.premisses))
        return Argument(node.conclusion, node.rule, ps, name.get(coord))
    return walk(arg, ())


def substitute_leaves(arg: Argument, tag: str, replacement: Argument, supply) -> Argument:
    """Replace leaves tagged *tag* by freshened copies of *replacement*."""
    def walk(node: Argument) -> Argument:
        if node.is_leaf:
            return freshen(replacement, supply) if node.tag == tag else node
        return node.with_premisses([walk(p) for p in node.premisses])
    return walk(arg)


def _bound_in(arg: Argument, tag: str) -> bool:
    return any(n.tag == tag for _, n in arg.leaves())


# -- reductions --------------------------------------------------------------

def _contract(node: Argument, supply) -> Argument | None:
    r = node.rule
    m = _major(node)
    if m is not None and m.rule is not None:
        mr = m.rule
        if mr is Rule.AND_I and r in (Rule.AND_E_LEFT, Rule.AND_E_RIGHT):
            return m.premisses[0 if r is Rule.AND_E_LEFT else 1]
        if mr is Rule.IMP_I and r is Rule.IMP_E:
            body, minor = m.premisses[0], node.premisses[0]
            if m.discharges is None:
                return body
            return substitute_leaves(body, m.discharges, minor, supply)
        if mr in (Rule.OR_I_LEFT, Rule.OR_I_RIGHT) and r is Rule.OR_E:
            i = 1 if mr is Rule.OR_I_LEFT else 2
            case = node.premisses[i]
            if node.discharges is None:
                return case
            return substitute_leaves(case, node.discharges, m.premisses[0], supply)
        if mr is Rule.BOT_E:
            return Argument(node.conclusion, Rule.BOT_E, (m.premisses[0],))
        if mr is Rule.OR_E:
            k = r.major_index
            first = node.with_premisses(node.premisses[:k] + (m.premisses[1],) + node.premisses[k + 1:])
            frame = freshen(node.with_premisses(node.premisses[:k] + (hole(m.conclusion),) + node.premisses[k + 1:]), supply)
            second = frame.with_premisses(frame.premisses[:k] + (m.premisses[2],) + frame.premisses[k + 1:])
            return Argument(node.conclusion, Rule.OR_E, (m.premisses[0], first, second), m.discharges)
        if mr.is_introduction:
            raise NormalizationError(f"{mr.value} consequence {m.conclusion} is the major premiss of {r.value}")
    if r is Rule.OR_E:
        for i in (1, 2):
            if node.discharges is None or not _bound_in(node.premisses[i], node.discharges):
                return node.premisses[i]
    return None


def _reduce_once(node: Argument, supply) -> Argument | None:
    for i, p in enumerate(node.premisses):
        q = _reduce_once(p, supply)
        if q is not None:
            ps = list(node.premisses)
            ps[i] = q
            return node.with_premisses(ps)
    if node.is_leaf:
        return None
    return _contract(node, supply)


def normalize(d: Argument, fuel: int = DEFAULT_FUEL) -> Argument:
    """Normal form of *d*.  Returns *d* itself when nothing reduces.

    Raises :class:`NormalizationError` once *fuel* reduction steps are spent.
    """
    t = relabel(d)
    supply = _Supply(tags_in(t))
    steps = 0
    while True:
        r = _reduce_once(t, supply)
        if r is None:
            break
        steps += 1
        if steps > fuel:
            raise NormalizationError(f"no normal form within {fuel} reduction steps")
        t = r
    return d if steps == 0 else relabel(t)


def subformula_violations(d: Argument) -> list[tuple[Coord, Formula]]:
    """Occurrences that are not subformulas of the open assumptions, the conclusion or ``_|_``."""
    allowed = {BOT}
    for f in open_assumptions(d) + [d.conclusion]:
        allowed.update(subformulas(f))
    return [(c, n.conclusion) for c, n in d.occurrences() if n.conclusion not in allowed]
