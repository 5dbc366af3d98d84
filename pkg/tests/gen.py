"""Random generators and brute-force reference classifiers shared by the tests."""
from __future__ import annotations

import itertools
import random

from pragmatist.argument import Argument, Rule
from pragmatist.build import and_i, and_l, and_r, bot_e, imp_e, leaf, or_e, or_il, or_ir
from pragmatist.formula import BOT, And, Atom, Formula, Imp, Or
from pragmatist.ndcalc import check_nj

ATOMS = ("p", "q", "r")
CONNECTIVES = (Imp, Or, And)


def random_formula(rng: random.Random, max_degree: int, atoms=ATOMS) -> Formula:
    """Uniform-ish random formula of degree at most *max_degree*."""
    if max_degree <= 0:
        return Atom(rng.choice(atoms))
    roll = rng.random()
    if roll < 0.25:
        return Atom(rng.choice(atoms))
    if roll < 0.32:
        return BOT
    rest = max_degree - 1
    k = rng.randint(0, rest)
    return rng.choice(CONNECTIVES)(random_formula(rng, k, atoms), random_formula(rng, rest - k, atoms))


def formulas_up_to(max_degree: int, atoms=("p", "q")) -> list[Formula]:
    """Every formula over *atoms* and absurdity with degree at most *max_degree*."""
    by = {0: [Atom(a) for a in atoms], 1: [BOT]}
    for d in range(1, max_degree + 1):
        level = by.setdefault(d, [])
        for i in range(d):
            for left, right in itertools.product(by[i], by[d - 1 - i]):
                level.extend(c(left, right) for c in CONNECTIVES)
    return [f for d in range(max_degree + 1) for f in by[d]]


# -- random structural trees ---------------------------------------------------

_TAGS = (None, None, "u", "v")


def random_tree(rng: random.Random, budget: int = 25, atoms=ATOMS) -> Argument:
    """A random argument tree with at most *budget* nodes; rules need not be respected."""
    if budget <= 1 or rng.random() < 0.25:
        if rng.random() < 0.05:
            return Argument(random_formula(rng, 2, atoms), hole=True)
        return leaf(random_formula(rng, 2, atoms), rng.choice(_TAGS))
    rule = rng.choice(list(Rule))
    n = rule.arity or rng.randint(1, 3)
    if n > budget - 1:
        return leaf(random_formula(rng, 2, atoms))
    left = budget - 1 - n
    shares = [1] * n
    for _ in range(left):
        if rng.random() < 0.6:
            shares[rng.randrange(n)] += 1
    premisses = tuple(random_tree(rng, s, atoms) for s in shares)
    tag = rng.choice(_TAGS) if rule in (Rule.IMP_I, Rule.OR_E, Rule.UNJUSTIFIED) else None
    return Argument(random_formula(rng, 2, atoms), rule, premisses, tag)


# -- literal transcriptions of the structural definitions --------------------------

_MAJOR = {"AndE_Left": 0, "AndE_Right": 0, "ImpE": 1, "OrE": 0, "BotE": 0}
_HORIZONTAL = {("ImpE", 0)}
_VERTICAL = {("OrE", 1), ("OrE", 2)}


def all_coords(arg: Argument):
    out = [()]
    for i, p in enumerate(arg.premisses):
        out.extend((i,) + c for c in all_coords(p))
    return out


def edges_down(arg: Argument, coord):
    """(rule name, premiss index) for every edge from *coord* down to the conclusion."""
    out = []
    for k in range(len(coord)):
        out.append((arg.at(coord[:k]).rule.value, coord[k]))
    return out


def bf_principal(arg: Argument, coord) -> bool:
    edges = edges_down(arg, coord)
    return bool(edges) and all(_MAJOR.get(r) == i for r, i in edges)


def bf_proper(arg: Argument) -> bool:
    if arg.rule is None:
        return not arg.hole
    return any(bf_principal(arg, c) for c in all_coords(arg)
               if arg.at(c).rule is None and not arg.at(c).hole)


def bf_placid(arg: Argument, coord) -> bool:
    return not any(e in _HORIZONTAL for e in edges_down(arg, coord))


def bf_canonical(arg: Argument) -> bool:
    if not bf_proper(arg):
        return False
    for c in all_coords(arg):
        if c and edges_down(arg, c)[-1] in _VERTICAL and bf_placid(arg, c) and not bf_proper(arg.at(c)):
            return False
    return True


def bf_critical(arg: Argument) -> list:
    def critical_here(c):
        return bool(c) and edges_down(arg, c)[-1] in _HORIZONTAL and not bf_canonical(arg.at(c))
    found = [c for c in all_coords(arg) if critical_here(c)]
    return sorted(c for c in found if not any(critical_here(c[:k]) for k in range(1, len(c))))


# -- random NJ derivations by forward synthesis ------------------------------------

class _Tags:
    def __init__(self):
        self.n = 0

    def __call__(self) -> str:
        self.n += 1
        return f"g{self.n}"


def _discharge(d: Argument, f: Formula, tag: str) -> Argument:
    if d.rule is None:
        return Argument(d.conclusion, tag=tag) if d.tag is None and d.conclusion == f else d
    return d.with_premisses([_discharge(p, f, tag) for p in d.premisses])


def _using(d: Argument, f: Formula, tag: str) -> Argument:
    """*d* with an extra use of the assumption *f* bound by *tag*."""
    return and_l(and_i(d, leaf(f, tag)))


def random_derivation(rng: random.Random, steps: int = 10, max_size: int = 60, atoms=ATOMS) -> Argument:
    """A random NJ derivation, typically with detours and permutable ``OrE`` steps."""
    fresh = _Tags()
    pool = [leaf(random_formula(rng, 2, atoms)) for _ in range(3)]
    pool.append(leaf(Atom(rng.choice(atoms))))
    for _ in range(steps):
        x = rng.choice(pool)
        y = rng.choice(pool)
        op = rng.randrange(9)
        try:
            if op == 0:
                new = and_i(x, y)
            elif op == 1:
                new = (and_l if rng.random() < 0.5 else and_r)(and_i(x, y))
            elif op == 2:
                t = fresh()
                body = _discharge(x, y.conclusion, t)
                new = Argument(Imp(y.conclusion, x.conclusion), Rule.IMP_I, (body,), t)
            elif op == 3:
                t = fresh()
                body = _discharge(x, y.conclusion, t)
                new = imp_e(y, Argument(Imp(y.conclusion, x.conclusion), Rule.IMP_I, (body,), t))
            elif op == 4:
                new = or_il(x, random_formula(rng, 1, atoms)) if rng.random() < 0.5 else or_ir(random_formula(rng, 1, atoms), x)
            elif op == 5:
                major = x if isinstance(x.conclusion, Or) else or_il(x, random_formula(rng, 1, atoms))
                a, b = major.conclusion.left, major.conclusion.right
                t = fresh()
                new = or_e(major, _using(y, a, t), _using(y, b, t), t)
            elif op == 6:
                c = x.conclusion
                if isinstance(c, And):
                    new = (and_l if rng.random() < 0.5 else and_r)(x)
                elif isinstance(c, Imp):
                    new = imp_e(leaf(c.antecedent), x)
                elif c == BOT:
                    new = bot_e(x, random_formula(rng, 2, atoms))
                else:
                    continue
            elif op == 7:
                p = Atom(rng.choice(atoms))
                new = bot_e(imp_e(leaf(p), leaf(Imp(p, BOT))), And(p, x.conclusion))
                new = and_r(new)
            else:
                # an elimination on top of a case analysis: a permutation redex
                if not isinstance(x.conclusion, Or):
                    continue
                t = fresh()
                a, b = x.conclusion.left, x.conclusion.right
                pair = And(y.conclusion, y.conclusion)
                new = and_l(or_e(x, _using(and_i(y, y), a, t), _using(and_i(y, y), b, t), t))
                assert new.premisses[0].conclusion == pair
        except (ValueError, AssertionError):
            continue
        if new.size <= max_size and not check_nj(new):
            pool.append(new)
    return max(pool, key=lambda d: d.size)
