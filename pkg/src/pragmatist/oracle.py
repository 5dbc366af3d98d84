"""Decision procedure for propositional intuitionistic logic (contraction-free sequent search).

Dyckhoff's G4ip: the left implication rule is split by the shape of the
antecedent, which makes every backward step shrink the sequent's multiset
weight, so the search terminates without loop checking.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .formula import BOT, And, Atom, Bot, Formula, Imp, Or, as_formula, parse

__all__ = ["provable", "parse_sequent"]


def provable(gamma: Iterable[Formula | str], goal: Formula | str) -> bool:
    """True iff ``gamma |- goal`` is derivable intuitionistically."""
    return _prove(frozenset(as_formula(f) for f in gamma), as_formula(goal))


def parse_sequent(text: str) -> tuple[list[Formula], Formula]:
    """``"A, B |- G"`` or just ``"G"``."""
    if "|-" in text:
        left, right = text.split("|-", 1)
        gamma = [parse(t) for t in left.split(",") if t.strip()]
        return gamma, parse(right)
    return [], parse(text)


def _saturate(ctx: frozenset) -> tuple[frozenset, list[Formula]]:
    """Apply the invertible single-premiss left rules until none applies.

    Returns the new context and the disjunctions still to be split.
    """
    work = list(ctx)
    done: set = set()
    while work:
        f = work.pop()
        if f in done:
            continue
        if isinstance(f, And):
            work += [f.left, f.right]
            continue
        if isinstance(f, Imp):
            a = f.antecedent
            if isinstance(a, Bot):
                continue
            if isinstance(a, And):
                work.append(Imp(a.left, Imp(a.right, f.consequent)))
                continue
            if isinstance(a, Or):
                work += [Imp(a.left, f.consequent), Imp(a.right, f.consequent)]
                continue
            if isinstance(a, Atom) and (a in done or a in work):
                work.append(f.consequent)
                continue
        done.add(f)
        if isinstance(f, Atom):
            # an atom may unlock implications already settled
            for g in [g for g in done if isinstance(g, Imp) and g.antecedent == f]:
                done.discard(g)
                work.append(g.consequent)
    return frozenset(done), [f for f in done if isinstance(f, Or)]


@lru_cache(maxsize=200_000)
def _prove(ctx: frozenset, goal: Formula) -> bool:
    ctx, disjunctions = _saturate(ctx)
    if BOT in ctx or goal in ctx:
        return True
    if disjunctions:
        d = disjunctions[0]
        rest = ctx - {d}
        return _prove(rest | {d.left}, goal) and _prove(rest | {d.right}, goal)
    if isinstance(goal, And):
        return _prove(ctx, goal.left) and _prove(ctx, goal.right)
    if isinstance(goal, Imp):
        return _prove(ctx | {goal.antecedent}, goal.consequent)
    if isinstance(goal, Or) and (_prove(ctx, goal.left) or _prove(ctx, goal.right)):
        return True
    for f in ctx:
        if isinstance(f, Imp) and isinstance(f.antecedent, Imp):
            d = f.antecedent.consequent
            rest = ctx - {f}
            if _prove(rest | {Imp(d, f.consequent)}, f.antecedent) and _prove(rest | {f.consequent}, goal):
                return True
    return False
