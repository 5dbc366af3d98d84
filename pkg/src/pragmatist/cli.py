"""Command-line interface.

Exit status: 0 when the verdict is positive, 1 when it is negative
(not canonical, invalid, unprovable, ...), 2 on malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .argument import (
    critical_subarguments, degree_of_argument, is_canonical, is_placid, is_proper,
    path_formulas, principal_path,
)
from .complement import (
    ComplementationError, FreshAtoms, check_complementation, dump_complementation,
    proof_case_complementation,
)
from .formula import FormulaSyntaxError, degree, is_atomic, parse
from .ndcalc import DEFAULT_FUEL, NormalizationError, check_nj, normalize
from .oracle import parse_sequent, provable
from .render import render_ascii, render_latex
from .textio import TreeSyntaxError, dump_argument, load_argument

__all__ = ["main"]


class _Malformed(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise _Malformed(f"cannot read {path}: {e.strerror}") from None


def _argument(path: str):
    return load_argument(_read(path))


def _show(f) -> str:
    return str(f) if is_atomic(f) else f"({f})"


def _coord(c) -> str:
    return "[" + " ".join(map(str, c)) + "]"


def _render(arg, fmt: str) -> str:
    if fmt == "ascii":
        return render_ascii(arg)
    if fmt == "latex":
        return render_latex(arg)
    return dump_argument(arg)


def cmd_classify(ns) -> int:
    arg = _argument(ns.file)
    path = principal_path(arg)
    canonical = is_canonical(arg)
    head = _show(arg.at(path[0]).conclusion) if path else "none"
    print(f"proper: {str(is_proper(arg)).lower()}")
    print(f"canonical: {str(canonical).lower()}; principal assumption: {head}")
    if path:
        print("principal path: " + " ; ".join(f"{_coord(c)} {f}" for c, f in zip(path, path_formulas(arg, path))))
    verticals = [c for c, n in arg.occurrences() if c and arg.at(c[:-1]).rule.is_vertical(c[-1])]
    for c in verticals:
        sub = arg.at(c)
        print(f"vertical {_coord(c)}: placid={str(is_placid(arg, c)).lower()} proper={str(is_proper(sub)).lower()}")
    crits = critical_subarguments(arg) if canonical else []
    print("critical: " + (" ".join(_coord(c) for c in crits) if crits else "none"))
    return 0 if canonical else 1


def cmd_degree(ns) -> int:
    if Path(ns.target).exists():
        print(degree_of_argument(_argument(ns.target)))
    else:
        print(degree(parse(ns.target)))
    return 0


def cmd_complement(ns) -> int:
    arg = _argument(ns.file)
    comps = proof_case_complementation(arg, FreshAtoms(ns.fresh_prefix))
    bad = 0
    for comp in comps:
        problems = check_complementation(comp)
        bad += bool(problems)
        print(f"; spine: {'/'.join(comp.spine) or 'identity'}; conclusion: {comp.conclusion}; "
              f"{'ok' if not problems else 'violations: ' + '; '.join(problems)}")
        print(dump_complementation(comp))
    return 1 if bad else 0


def _witness(path: str, arg_path: str | None):
    from .witness import load_witness
    w = load_witness(_read(path))
    if arg_path is not None and _argument(arg_path) != w.argument:
        raise _Malformed(f"{path} is a witness for a different argument than {arg_path}")
    return w


def cmd_check_witness(ns) -> int:
    from .witness import check_validity
    w = _witness(ns.witness, ns.argument)
    report = check_validity(w.argument, w)
    for v in report.verdicts:
        where = "/".join(v.complementation.spine) or "identity"
        print(f"{where} -> {v.complementation.conclusion}: {'ok' if v.ok else 'invalid'}")
        for p in v.problems:
            print(f"  {p}")
    print("valid" if report.ok else "invalid")
    return 0 if report.ok else 1


def cmd_extract(ns) -> int:
    from .extract import ExtractionError, extract_report
    w = _witness(ns.witness, ns.file)
    try:
        d, report = extract_report(w.argument, w, fuel=ns.fuel)
    except ExtractionError as e:
        print(f"extraction failed: {e}", file=sys.stderr)
        return 1
    if ns.out:
        Path(ns.out).write_text(dump_argument(d) + "\n")
    print(_render(d, ns.format))
    if ns.report:
        text = json.dumps(report, indent=2)
        if ns.report == "-":
            print(text)
        else:
            Path(ns.report).write_text(text + "\n")
    return 0


def cmd_normalize(ns) -> int:
    d = _argument(ns.file)
    problems = check_nj(d)
    if problems:
        raise _Malformed("not a derivation: " + "; ".join(map(str, problems)))
    try:
        n = normalize(d, ns.fuel)
    except NormalizationError as e:
        print(str(e), file=sys.stderr)
        return 1
    print(_render(n, ns.format))
    return 0


def cmd_check_nj(ns) -> int:
    problems = check_nj(_argument(ns.file))
    for p in problems:
        print(p)
    if not problems:
        print("ok")
    return 1 if problems else 0


def cmd_prove(ns) -> int:
    gamma, goal = parse_sequent(ns.sequent)
    ok = provable(gamma, goal)
    print("provable" if ok else "unprovable")
    return 0 if ok else 1


def cmd_render(ns) -> int:
    fmt = "latex" if ns.latex else "ascii" if ns.ascii else ns.format
    print(_render(_argument(ns.file), fmt))
    return 0


def cmd_search(ns) -> int:
    from .witness import dump_witness, search_witness
    arg = _argument(ns.file)
    w = search_witness(arg, ns.depth, ns.atoms, ns.fresh_prefix)
    if w is None:
        print("no witness within bounds")
        return 1
    text = dump_witness(w)
    if ns.out:
        Path(ns.out).write_text(text + "\n")
    else:
        print(text)
    return 0


def cmd_corpus(ns) -> int:
    from .corpus import run_corpus, write_corpus
    if ns.action == "export":
        if not ns.dir:
            raise _Malformed("corpus export needs a target directory")
        for p in write_corpus(ns.dir):
            print(p)
        return 0
    results = run_corpus(ns.dir)
    for r in results:
        extra = f" ({r.detail})" if r.detail and not r.ok else ""
        print(f"{'PASS' if r.ok else 'FAIL'} {r.file}: expected {r.expected}, got {r.actual}{extra}")
    failed = sum(not r.ok for r in results)
    print(f"{len(results) - failed}/{len(results)} items reproduce their verdict")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pragmatist", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("ascii", "latex", "tree"), default="tree")

    sp = sub.add_parser("classify", help="proper / canonical / critical verdicts")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("degree", help="degree of an argument file or a formula")
    sp.add_argument("target")
    sp.set_defaults(func=cmd_degree)

    sp = sub.add_parser("complement", help="emit the proof-case complementations")
    sp.add_argument("file")
    sp.add_argument("--fresh-prefix", default="#c")
    sp.set_defaults(func=cmd_complement)

    sp = sub.add_parser("check-witness", help="check a witness file")
    sp.add_argument("witness")
    sp.add_argument("--argument", help="argument file the witness must belong to")
    sp.set_defaults(func=cmd_check_witness)

    sp = sub.add_parser("extract", help="derivation from an argument and its witness")
    sp.add_argument("file")
    sp.add_argument("--witness", required=True)
    sp.add_argument("--out", help="write the derivation here in tree format")
    sp.add_argument("--report", help="write a JSON report here ('-' for standard output)")
    sp.add_argument("--fuel", type=int, default=DEFAULT_FUEL)
    fmt(sp)
    sp.set_defaults(func=cmd_extract)

    sp = sub.add_parser("normalize", help="normal form of a derivation")
    sp.add_argument("file")
    sp.add_argument("--fuel", type=int, default=DEFAULT_FUEL)
    fmt(sp)
    sp.set_defaults(func=cmd_normalize)

    sp = sub.add_parser("check-nj", help="check every step against its rule")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_check_nj)

    sp = sub.add_parser("prove", help="decide 'A, B |- G' intuitionistically")
    sp.add_argument("sequent")
    sp.set_defaults(func=cmd_prove)

    sp = sub.add_parser("render", help="draw an argument")
    sp.add_argument("file")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--ascii", action="store_true")
    g.add_argument("--latex", action="store_true")
    sp.add_argument("--format", choices=("ascii", "latex", "tree"), default="ascii")
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("search", help="bounded search for a witness")
    sp.add_argument("file")
    sp.add_argument("--depth", type=int, default=4)
    sp.add_argument("--atoms", type=int, default=6)
    sp.add_argument("--fresh-prefix", default="#c")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("corpus", help="run or export the bundled corpus")
    sp.add_argument("action", choices=("run", "export"))
    sp.add_argument("dir", nargs="?", help="corpus directory (default: the bundled one)")
    sp.set_defaults(func=cmd_corpus)
    return p


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        return ns.func(ns)
    except (_Malformed, TreeSyntaxError, FormulaSyntaxError, ComplementationError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
