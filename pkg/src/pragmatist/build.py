"""Smart constructors that infer each step's conclusion from its premisses.

Handy for writing arguments in code::

    imp_e(leaf("p"), leaf("p -> q"))          # concludes q
    or_e(leaf("p | q"), case_p, case_q, tag="u")
"""
from __future__ import annotations

from .argument import Argument, Rule, leaf, step
from .formula import And, Formula, Imp, Or, as_formula

__all__ = [
    "leaf", "and_l", "and_r", "imp_e", "or_e", "bot_e",
    "and_i", "or_il", "or_ir", "imp_i", "unjustified",
]


def _need(f: Formula, kind, what: str) -> Formula:
    if not isinstance(f, kind):
        raise ValueError(f"{what}: {f} has the wrong main connective")
    return f


def and_l(p: Argument) -> Argument:
    return step(Rule.AND_E_LEFT, _need(p.conclusion, And, "AndE").left, p)


def and_r(p: Argument) -> Argument:
    return step(Rule.AND_E_RIGHT, _need(p.conclusion, And, "AndE").right, p)


def imp_e(minor: Argument, major: Argument) -> Argument:
    return step(Rule.IMP_E, _need(major.conclusion, Imp, "ImpE").consequent, minor, major)


def or_e(major: Argument, left: Argument, right: Argument, tag: str) -> Argument:
    return step(Rule.OR_E, left.conclusion, major, left, right, discharges=tag)


def bot_e(p: Argument, conclusion: Formula | str) -> Argument:
    return step(Rule.BOT_E, conclusion, p)


def and_i(a: Argument, b: Argument) -> Argument:
    return step(Rule.AND_I, And(a.conclusion, b.conclusion), a, b)


def or_il(p: Argument, right: Formula | str) -> Argument:
    return step(Rule.OR_I_LEFT, Or(p.conclusion, as_formula(right)), p)


def or_ir(left: Formula | str, p: Argument) -> Argument:
    return step(Rule.OR_I_RIGHT, Or(as_formula(left), p.conclusion), p)


def imp_i(p: Argument, antecedent: Formula | str, tag: str | None = None) -> Argument:
    return step(Rule.IMP_I, Imp(as_formula(antecedent), p.conclusion), p, discharges=tag)


def unjustified(conclusion: Formula | str, *premisses: Argument, tag: str | None = None) -> Argument:
    return step(Rule.UNJUSTIFIED, conclusion, *premisses, discharges=tag)
