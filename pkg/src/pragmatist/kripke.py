"""Finite Kripke countermodels for intuitionistic propositional logic.

A model is a finite partial order of worlds with an upward-closed set of
worlds per atom.  Worlds are bits of an integer mask, so the worlds that
force a formula form one mask.  :func:`refutable_many` evaluates many
formulas at once over every model of a given size with numpy arrays.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .formula import And, Atom, Bot, Formula, Or, as_formula, atoms

__all__ = ["KripkeModel", "posets", "countermodel", "forcing_mask", "refutable_many"]


@lru_cache(maxsize=None)
def posets(n: int) -> tuple[tuple[int, ...], ...]:
    """Every partial order on ``n`` labelled worlds, as the mask of worlds above each world."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    out = []
    for chosen in itertools.product((False, True), repeat=len(pairs)):
        le = {(i, i) for i in range(n)} | {p for p, c in zip(pairs, chosen) if c}
        if any((j, i) in le for i, j in le if i != j):
            continue
        if any((i, k) not in le for i, j in le for j2, k in le if j == j2):
            continue
        out.append(tuple(sum(1 << j for j in range(n) if (i, j) in le) for i in range(n)))
    return tuple(out)


def _upsets(up: Sequence[int]) -> list[int]:
    n = len(up)
    return [m for m in range(1 << n) if all(not (m >> w) & 1 or (up[w] & m) == up[w] for w in range(n))]


@dataclass(frozen=True)
class KripkeModel:
    up: tuple[int, ...]                  # up[w]: mask of worlds above w, w included
    valuation: tuple[tuple[str, int], ...]

    @property
    def worlds(self) -> int:
        return len(self.up)

    def forces(self, f: Formula) -> int:
        return forcing_mask(self.up, dict(self.valuation), f)


def forcing_mask(up: Sequence[int], val: dict[str, int], f: Formula) -> int:
    """Mask of the worlds forcing *f*."""
    if isinstance(f, Atom):
        return val.get(f.name, 0)
    if isinstance(f, Bot):
        return 0
    if isinstance(f, And):
        return forcing_mask(up, val, f.left) & forcing_mask(up, val, f.right)
    if isinstance(f, Or):
        return forcing_mask(up, val, f.left) | forcing_mask(up, val, f.right)
    a = forcing_mask(up, val, f.antecedent)
    b = forcing_mask(up, val, f.consequent)
    bad = a & ~b
    return sum(1 << w for w, u in enumerate(up) if not u & bad)


def countermodel(gamma: Iterable[Formula | str], goal: Formula | str, max_worlds: int = 3) -> KripkeModel | None:
    """A model with a world forcing all of *gamma* but not *goal*, or ``None``."""
    gamma = [as_formula(g) for g in gamma]
    goal = as_formula(goal)
    names = sorted(set().union(*(atoms(f) for f in gamma + [goal])))
    for n in range(1, max_worlds + 1):
        full = (1 << n) - 1
        for up in posets(n):
            ups = _upsets(up)
            for vals in itertools.product(ups, repeat=len(names)):
                val = dict(zip(names, vals))
                ok = full
                for g in gamma:
                    ok &= forcing_mask(up, val, g)
                if ok & ~forcing_mask(up, val, goal):
                    return KripkeModel(up, tuple(val.items()))
    return None


def _model_arrays(n: int, names: Sequence[str]) -> tuple[np.ndarray, dict[str, np.ndarray]]:
    ups, vals = [], {a: [] for a in names}
    for up in posets(n):
        for choice in itertools.product(_upsets(up), repeat=len(names)):
            ups.append(up)
            for a, m in zip(names, choice):
                vals[a].append(m)
    return np.array(ups, dtype=np.int64), {a: np.array(v, dtype=np.int64) for a, v in vals.items()}


def refutable_many(formulas: Sequence[Formula], names: Sequence[str], max_worlds: int = 3) -> np.ndarray:
    """For each formula, whether some model with at most *max_worlds* worlds refutes it."""
    out = np.zeros(len(formulas), dtype=bool)
    for n in range(1, max_worlds + 1):
        up, val = _model_arrays(n, names)
        full = (1 << n) - 1
        memo: dict[Formula, np.ndarray] = {}
        zero = np.zeros(len(up), dtype=np.int64)

        def mask(f: Formula) -> np.ndarray:
            got = memo.get(f)
            if got is not None:
                return got
            if isinstance(f, Atom):
                got = val.get(f.name, zero)
            elif isinstance(f, Bot):
                got = zero
            elif isinstance(f, And):
                got = mask(f.left) & mask(f.right)
            elif isinstance(f, Or):
                got = mask(f.left) | mask(f.right)
            else:
                bad = mask(f.antecedent) & ~mask(f.consequent)
                got = zero.copy()
                for w in range(n):
                    got |= ((up[:, w] & bad) == 0).astype(np.int64) << w
            memo[f] = got
            return got

        for i, f in enumerate(formulas):
            if not out[i]:
                out[i] = bool(np.any(mask(f) != full))
    return out
