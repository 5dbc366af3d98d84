"""Text format for arguments, and the s-expression reader the other file formats share.

Arguments::

    (step LABEL [discharges TAG] (concl FORMULA) PREMISS...)
    (assume FORMULA [tag TAG])
    (hole FORMULA)

``;`` starts a comment running to the end of the line.  Inside ``concl``,
``assume`` and the other formula-carrying forms the body is raw formula
text, so formulas may contain parentheses freely.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .argument import Argument, Rule, WellFormednessError, check_discharges
from .formula import Formula, FormulaSyntaxError, parse

__all__ = [
    "TreeSyntaxError", "SExpr", "read_sexprs", "read_one",
    "argument_from_sexpr", "load_argument", "dump_argument",
]

RAW_HEADS = frozenset({"concl", "assume", "hole", "delta", "fresh", "formula", "goal"})


class TreeSyntaxError(ValueError):
    def __init__(self, message: str, pos: int | None = None):
        super().__init__(message if pos is None else f"{message} (at offset {pos})")
        self.pos = pos


@dataclass
class SExpr:
    head: str
    items: list = field(default_factory=list)  # SExpr or str
    pos: int = 0
    raw: str | None = None

    def lists(self, head: str | None = None) -> list["SExpr"]:
        return [x for x in self.items if isinstance(x, SExpr) and (head is None or x.head == head)]

    def words(self) -> list[str]:
        return [x for x in self.items if isinstance(x, str)]

    def one(self, head: str) -> "SExpr":
        found = self.lists(head)
        if len(found) != 1:
            raise TreeSyntaxError(f"({self.head} ...) needs exactly one ({head} ...), found {len(found)}", self.pos)
        return found[0]


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def skip(self):
        t = self.text
        while self.i < len(t):
            if t[self.i].isspace():
                self.i += 1
            elif t[self.i] == ";":
                while self.i < len(t) and t[self.i] != "\n":
                    self.i += 1
            else:
                break

    def word(self) -> str:
        start = self.i
        t = self.text
        while self.i < len(t) and not t[self.i].isspace() and t[self.i] not in "();":
            self.i += 1
        return t[start:self.i]

    def node(self) -> SExpr | str:
        self.skip()
        if self.i >= len(self.text):
            raise TreeSyntaxError("unexpected end of input", self.i)
        if self.text[self.i] == ")":
            raise TreeSyntaxError("unexpected ')'", self.i)
        if self.text[self.i] != "(":
            return self.word()
        pos = self.i
        self.i += 1
        self.skip()
        head = self.word()
        if not head:
            raise TreeSyntaxError("expected a keyword after '('", self.i)
        if head in RAW_HEADS:
            return SExpr(head, [], pos, self.raw_body(pos))
        items = []
        while True:
            self.skip()
            if self.i >= len(self.text):
                raise TreeSyntaxError(f"unclosed ({head} ...", pos)
            if self.text[self.i] == ")":
                self.i += 1
                return SExpr(head, items, pos)
            items.append(self.node())

    def raw_body(self, pos: int) -> str:
        depth = 0
        start = self.i
        t = self.text
        while self.i < len(t):
            ch = t[self.i]
            if ch == "(":
                depth += 1
            elif ch == ")":
                if depth == 0:
                    body = t[start:self.i]
                    self.i += 1
                    return body.strip()
                depth -= 1
            self.i += 1
        raise TreeSyntaxError("unclosed formula form", pos)


def read_sexprs(text: str) -> list[SExpr | str]:
    r = _Reader(text)
    out = []
    while True:
        r.skip()
        if r.i >= len(text):
            return out
        out.append(r.node())


def read_one(text: str, head: str | None = None) -> SExpr:
    nodes = read_sexprs(text)
    if len(nodes) != 1 or not isinstance(nodes[0], SExpr):
        raise TreeSyntaxError(f"expected a single form, found {len(nodes)} top-level items")
    if head is not None and nodes[0].head != head:
        raise TreeSyntaxError(f"expected ({head} ...), found ({nodes[0].head} ...)", nodes[0].pos)
    return nodes[0]


def _formula(text: str, pos: int) -> Formula:
    try:
        return parse(text)
    except FormulaSyntaxError as e:
        raise TreeSyntaxError(f"bad formula: {e}", pos) from None


def _split_tag(body: str) -> tuple[str, str | None]:
    words = body.split()
    if len(words) >= 3 and words[-2] == "tag":
        return " ".join(words[:-2]), words[-1]
    return body, None


def argument_from_sexpr(node: SExpr | str) -> Argument:
    if not isinstance(node, SExpr):
        raise TreeSyntaxError(f"expected an argument form, found {node!r}")
    try:
        if node.head == "assume":
            text, tag = _split_tag(node.raw)
            return Argument(_formula(text, node.pos), tag=tag)
        if node.head == "hole":
            return Argument(_formula(node.raw, node.pos), hole=True)
        if node.head != "step":
            raise TreeSyntaxError(f"unknown form ({node.head} ...)", node.pos)
        words = node.words()
        if not words:
            raise TreeSyntaxError("step without a rule label", node.pos)
        try:
            rule = Rule.lookup(words[0])
        except ValueError as e:
            raise TreeSyntaxError(str(e), node.pos) from None
        discharges = None
        if len(words) == 3 and words[1] == "discharges":
            discharges = words[2]
        elif len(words) != 1:
            raise TreeSyntaxError(f"unexpected words in step: {' '.join(words[1:])}", node.pos)
        concl = [x for x in node.lists() if x.head == "concl"]
        if len(concl) != 1:
            raise TreeSyntaxError("step needs exactly one (concl ...)", node.pos)
        premisses = tuple(argument_from_sexpr(x) for x in node.lists() if x.head != "concl")
        return Argument(_formula(concl[0].raw, concl[0].pos), rule, premisses, discharges)
    except WellFormednessError as e:
        raise TreeSyntaxError(str(e), node.pos) from None


def load_argument(text: str, *, closed: bool = True) -> Argument:
    """Parse an argument file.  With *closed*, every tag must be bound on its own path."""
    arg = argument_from_sexpr(read_one(text))
    if closed:
        problems = check_discharges(arg)
        if problems:
            raise TreeSyntaxError("; ".join(problems))
    return arg


def dump_argument(arg: Argument, indent: int = 0) -> str:
    pad = " " * indent
    if arg.hole:
        return f"{pad}(hole {arg.conclusion})"
    if arg.is_leaf:
        tag = "" if arg.tag is None else f" tag {arg.tag}"
        return f"{pad}(assume {arg.conclusion}{tag})"
    head = f"{pad}(step {arg.rule.value}"
    if arg.discharges is not None:
        head += f" discharges {arg.discharges}"
    head += f" (concl {arg.conclusion})"
    body = "\n".join(dump_argument(p, indent + 2) for p in arg.premisses)
    return f"{head}\n{body})"
