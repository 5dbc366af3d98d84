"""Gentzen-style renderings of argument trees: ASCII art and LaTeX ``\\infer``."""
from __future__ import annotations

from .argument import Argument, Rule, bindings
from .formula import to_latex

__all__ = ["render_ascii", "render_latex"]

_SHORT = {
    Rule.AND_E_LEFT: "&E", Rule.AND_E_RIGHT: "&E", Rule.IMP_E: "->E", Rule.OR_E: "|E",
    Rule.BOT_E: "_|_E", Rule.AND_I: "&I", Rule.OR_I_LEFT: "|I", Rule.OR_I_RIGHT: "|I",
    Rule.IMP_I: "->I", Rule.UNJUSTIFIED: "?",
}
_LATEX_RULE = {
    Rule.AND_E_LEFT: r"\wedge E", Rule.AND_E_RIGHT: r"\wedge E", Rule.IMP_E: r"\to E",
    Rule.OR_E: r"\vee E", Rule.BOT_E: r"\bot E", Rule.AND_I: r"\wedge I",
    Rule.OR_I_LEFT: r"\vee I", Rule.OR_I_RIGHT: r"\vee I", Rule.IMP_I: r"\to I",
    Rule.UNJUSTIFIED: r"?",
}


def _leaf_text(node: Argument, bound: bool) -> str:
    if node.hole:
        return f"<{node.conclusion}>"
    if node.tag is not None and bound:
        return f"[{node.conclusion}]{node.tag}"
    return str(node.conclusion)


def _box(node: Argument, coord, bound) -> tuple[list[str], int, int]:
    """Lines (bottom is the conclusion), total width, and the conclusion's left offset."""
    if node.is_leaf:
        text = _leaf_text(node, coord in bound)
        return [text], len(text), 0
    parts = [_box(p, coord + (i,), bound) for i, p in enumerate(node.premisses)]
    gap = 3
    height = max(len(p[0]) for p in parts)
    rows = [""] * height
    x = 0
    for lines, width, _ in parts:
        padded = [" " * width] * (height - len(lines)) + lines
        for k in range(height):
            rows[k] += (" " * gap if x else "") + padded[k].ljust(width)
        x += width + (gap if x else 0)
    above = max(len(r) for r in rows)
    concl = str(node.conclusion)
    label = " " + _SHORT[node.rule] + ("" if node.discharges is None else f" {node.discharges}")
    bar = max(above, len(concl))
    shift = (bar - above) // 2
    rows = [" " * shift + r for r in rows]
    offset = (bar - len(concl)) // 2
    lines = rows + ["-" * bar + label, " " * offset + concl]
    width = max(len(l) for l in lines)
    return [l.ljust(width) for l in lines], width, offset


def render_ascii(arg: Argument) -> str:
    lines, _, _ = _box(arg, (), bindings(arg))
    return "\n".join(l.rstrip() for l in lines)


def render_latex(arg: Argument) -> str:
    """Nested ``\\infer`` commands (proof.sty); discharged leaves as ``[A]^{t}``."""
    bound = bindings(arg)

    def go(node: Argument, coord) -> str:
        f = to_latex(node.conclusion)
        if node.hole:
            return rf"\bigtriangledown_{{{f}}}"
        if node.is_leaf:
            if node.tag is not None and coord in bound:
                return rf"[{f}]^{{{node.tag}}}"
            return f
        label = _LATEX_RULE[node.rule]
        if node.discharges is not None:
            label += rf"^{{{node.discharges}}}"
        ps = " & ".join(go(p, coord + (i,)) for i, p in enumerate(node.premisses))
        return rf"\infer[{label}]{{{f}}}{{{ps}}}"
    return go(arg, ())
