"""Propositional formulas over atoms, implication, disjunction, conjunction and absurdity.

Negation is not a constructor: ``~A`` parses to ``A -> _|_``.

Concrete syntax (precedence ``~`` > ``&`` > ``|`` > ``->``, implication
associates to the right)::

    formula := imp
    imp     := or ("->" imp)?
    or      := and ("|" and)*
    and     := unary ("&" unary)*
    unary   := "~" unary | atom | "_|_" | "F" | "(" formula ")"
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Union

__all__ = [
    "Formula", "Atom", "Bot", "Imp", "Or", "And", "BOT",
    "FormulaSyntaxError", "parse", "neg", "degree", "atoms", "subformulas",
    "is_atomic", "to_latex", "as_formula",
]


@dataclass(frozen=True, slots=True)
class Atom:
    name: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("atom name must be nonempty")

    def __str__(self):
        return self.name


@dataclass(frozen=True, slots=True)
class Bot:
    def __str__(self):
        return "_|_"


@dataclass(frozen=True, slots=True)
class Imp:
    antecedent: "Formula"
    consequent: "Formula"

    def __str__(self):
        return _show(self)


@dataclass(frozen=True, slots=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return _show(self)


@dataclass(frozen=True, slots=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return _show(self)


Formula = Union[Atom, Bot, Imp, Or, And]
BOT = Bot()


def neg(f: Formula) -> Imp:
    return Imp(f, BOT)


def is_atomic(f: Formula) -> bool:
    """True for atoms only; absurdity is a logical constant, not an atom."""
    return isinstance(f, Atom)


def degree(f: Formula) -> int:
    """Number of logical constants (``->``, ``|``, ``&``, ``_|_``) occurring in *f*."""
    if isinstance(f, Atom):
        return 0
    if isinstance(f, Bot):
        return 1
    if isinstance(f, Imp):
        return degree(f.antecedent) + degree(f.consequent) + 1
    return degree(f.left) + degree(f.right) + 1


def atoms(f: Formula) -> frozenset[str]:
    return frozenset(g.name for g in subformulas(f) if isinstance(g, Atom))


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Imp):
        yield from subformulas(f.antecedent)
        yield from subformulas(f.consequent)
    elif isinstance(f, (Or, And)):
        yield from subformulas(f.left)
        yield from subformulas(f.right)


# -- printing ---------------------------------------------------------------

_PREC = {Imp: 1, Or: 2, And: 3}


def _prec(f: Formula) -> int:
    if isinstance(f, Imp) and f.consequent == BOT:
        return 4
    return _PREC.get(type(f), 5)


def _wrap(f: Formula, parens: bool) -> str:
    s = _show(f)
    return f"({s})" if parens else s


def _show(f: Formula) -> str:
    if isinstance(f, (Atom, Bot)):
        return str(f)
    if isinstance(f, Imp):
        if f.consequent == BOT:
            return "~" + _wrap(f.antecedent, _prec(f.antecedent) < 4)
        return f"{_wrap(f.antecedent, _prec(f.antecedent) <= 1)} -> {_wrap(f.consequent, _prec(f.consequent) < 1)}"
    op = "|" if isinstance(f, Or) else "&"
    p = _prec(f)
    return f"{_wrap(f.left, _prec(f.left) < p)} {op} {_wrap(f.right, _prec(f.right) <= p)}"


_LATEX_OPS = {Imp: r"\to", Or: r"\vee", And: r"\wedge"}


def to_latex(f: Formula) -> str:
    """LaTeX rendering; negation is written out as an implication into ``\\bot``."""
    if isinstance(f, Atom):
        if f.name[0] != "#":
            return f.name
        stem, index = re.fullmatch(r"#(.*?)(\d*)", f.name).groups()
        return rf"\hat{{{stem}}}" + (f"_{{{index}}}" if index else "")
    if isinstance(f, Bot):
        return r"\bot"
    if isinstance(f, Imp):
        l, r = f.antecedent, f.consequent
    else:
        l, r = f.left, f.right

    def side(g: Formula) -> str:
        s = to_latex(g)
        return s if isinstance(g, (Atom, Bot)) else "{(" + s + ")}"
    return f"{side(l)} {_LATEX_OPS[type(f)]} {side(r)}"


# -- parsing ----------------------------------------------------------------

class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<imp>->|→)
  | (?P<bot>_\|_|⊥)
  | (?P<or>\||∨)
  | (?P<and>&|∧)
  | (?P<neg>~|¬)
  | (?P<lp>\()
  | (?P<rp>\))
  | (?P<atom>\#?[A-Za-z][A-Za-z0-9_']*)
""", re.VERBOSE)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            if kind == "atom" and value == "F":
                kind = "bot"
            out.append((kind, value, pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        if tok[0] != kind:
            what = tok[1] or "end of input"
            raise FormulaSyntaxError(f"expected {kind}, found {what!r}", self.text, tok[2])
        self.i += 1
        return tok

    def formula(self) -> Formula:
        left = self.disj()
        if self.peek() == "imp":
            self.i += 1
            return Imp(left, self.formula())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek() == "or":
            self.i += 1
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek() == "and":
            self.i += 1
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        kind, value, pos = self.tokens[self.i]
        if kind == "neg":
            self.i += 1
            return neg(self.unary())
        if kind == "atom":
            self.i += 1
            return Atom(value)
        if kind == "bot":
            self.i += 1
            return BOT
        if kind == "lp":
            self.i += 1
            f = self.formula()
            self.take("rp")
            return f
        raise FormulaSyntaxError(f"unexpected {value or 'end of input'!r}", self.text, pos)


def parse(text: str) -> Formula:
    """Parse *text* into a formula; raises :class:`FormulaSyntaxError` with a position."""
    p = _Parser(text)
    f = p.formula()
    p.take("end")
    return f


def as_formula(f: Formula | str) -> Formula:
    return parse(f) if isinstance(f, str) else f
