"""Command-line front end.

Words are whitespace-separated tokens ``s<k>`` (atom ``k``, 1-based) and
``D`` (the Garside element), each optionally raised to ``^<int>``.  Elements
are printed as ``{"delta": r, "factors": [[atoms], ...]}``.

Exit status: 0 success, 2 usage or input error, 3 budget exhausted,
4 mathematical domain error.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import abelian, conjugacy, translation
from .core import Element, GarsideStructure, normalize
from .errors import Budget, BudgetExceeded, DEFAULT_BUDGET, InputError, MathDomainError
from .structures import structure_from_selector

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_DOMAIN = 0, 2, 3, 4


class WordSyntaxError(InputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(s)(\d+)|(D))(?:\^(-?\d+))?")


def parse_word(text: str, S: GarsideStructure | None = None) -> list[int]:
    """Expand a word into signed atoms.  ``D`` expands to the structure's Δ word."""
    out: list[int] = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise WordSyntaxError(f"unexpected {text[col]!r}", col)
        exp = int(m.group(4)) if m.group(4) is not None else 1
        if m.group(3):
            if S is None:
                raise InputError("'D' needs a structure to expand")
            base = list(S.delta_word)
        else:
            atom = int(m.group(2))
            if atom < 1 or (S is not None and atom > S.atom_count):
                limit = S.atom_count if S is not None else "n"
                raise WordSyntaxError(f"atom s{atom} out of range 1..{limit}", m.start(1))
            base = [atom]
        if exp < 0:
            base = [-a for a in reversed(base)]
        out.extend(base * abs(exp))
        pos = m.end()
    return out


def element(text: str, S: GarsideStructure) -> Element:
    return normalize(parse_word(text, S), S)


def element_json(e: Element) -> dict:
    return {"delta": e.delta, "factors": e.factor_words()}


def element_from_json(obj: dict, S: GarsideStructure) -> Element:
    word = [a for f in obj["factors"] for a in f]
    return Element.delta_power(S, obj["delta"]) * normalize(word, S)


def summit_dot(ss: conjugacy.SummitSet) -> str:
    """DOT digraph: nodes in canonical order, edges labelled by the conjugating simple."""
    index = {h: i for i, h in enumerate(ss.members)}
    lines = ["digraph summit {"]
    for h, i in index.items():
        lines.append(f'  n{i} [label="{h}"];')
    for a, c, b in ss.edges:
        label = " ".join(f"s{k}" for k in c.word())
        lines.append(f'  n{index[a]} -> n{index[b]} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def summit_json(ss: conjugacy.SummitSet) -> dict:
    index = {h: i for i, h in enumerate(ss.members)}
    return {
        "kind": ss.kind,
        "inf": ss.inf_s,
        "sup": ss.sup_s,
        "nodes": [element_json(h) for h in ss.members],
        "edges": [{"source": index[a], "target": index[b], "label": element_json(c)} for a, c, b in ss.edges],
    }


def _opt(e: Element | None):
    return None if e is None else element_json(e)


def _frac(q) -> dict:
    return {"num": q.numerator, "den": q.denominator}


# ------------------------------------------------------------ commands


@dataclass
class Context:
    S: GarsideStructure
    budget: Budget
    dot: bool

    def el(self, text: str) -> Element:
        return element(text, self.S)

    def els(self, texts: Sequence[str]) -> list[Element]:
        return [self.el(t) for t in texts]


def cmd_nf(ctx, args):
    return element_json(ctx.el(args.word))


def cmd_eq(ctx, args):
    return ctx.el(args.x) == ctx.el(args.y)


def cmd_conj(ctx, args):
    w = conjugacy.is_conjugate(ctx.el(args.x), ctx.el(args.y), ctx.budget)
    return {"conjugate": w is not None, "conjugator": _opt(w)}


def _set_cmd(kind):
    def run(ctx, args):
        ss = conjugacy.summit_set(ctx.el(args.word), kind, ctx.budget)
        return [element_json(h) for h in ss.members]

    return run


def cmd_graph(ctx, args):
    ss = conjugacy.conjugacy_graph(ctx.el(args.word), args.set, ctx.budget)
    return summit_dot(ss) if ctx.dot else summit_json(ss)


def cmd_translation(ctx, args):
    return _frac(translation.translation_number(ctx.el(args.word), ctx.budget))


def cmd_abelian_basis(ctx, args):
    b = abelian.abelian_basis(ctx.els(args.gens), ctx.budget)
    return {"basis": [element_json(g) for g in b.generators], "coordinates": [list(c) for c in b.coordinates]}


def cmd_abelian_member(ctx, args):
    a = abelian.member(ctx.el(args.word), ctx.els(args.gens), ctx.budget)
    return {"member": a is not None, "exponents": None if a is None else list(a)}


def cmd_abelian_conj_member(ctx, args):
    r = abelian.conj_member(ctx.el(args.word), ctx.els(args.gens), ctx.budget)
    if r is None:
        return {"member": False, "exponents": None, "conjugator": None}
    return {"member": True, "exponents": list(r[0]), "conjugator": element_json(r[1])}


def cmd_abelian_equal(ctx, args):
    return abelian.subgroups_equal(ctx.els(args.first), ctx.els(args.second), ctx.budget)


def cmd_abelian_conjugate(ctx, args):
    w = abelian.subgroups_conjugate(ctx.els(args.first), ctx.els(args.second), ctx.budget)
    return {"conjugate": w is not None, "conjugator": _opt(w)}


def cmd_report(ctx, args):
    from .plotting import draw_summit_graph

    g = ctx.el(args.word)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    t = translation.translation_number(g, ctx.budget)
    report = {
        "structure": ctx.S.name,
        "element": element_json(g),
        "text": str(g),
        "inf": g.inf,
        "sup": g.sup,
        "translation_number": _frac(t),
        "summit_sets": {},
        "figures": [],
    }
    for kind in args.sets:
        ss = conjugacy.conjugacy_graph(g, kind, ctx.budget)
        report["summit_sets"][kind] = summit_json(ss)
        fig = draw_summit_graph(ss, out / f"{kind}_graph.png")
        (out / f"{kind}_graph.dot").write_text(summit_dot(ss))
        report["figures"].append(str(fig))
    (out / "report.json").write_text(json.dumps(report, indent=2) + "\n")
    return {"report": str(out / "report.json"), "figures": report["figures"]}


# ------------------------------------------------------------ parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--dot", action="store_true", default=argparse.SUPPRESS, help="DOT output (graph only)")
    fmt.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output (default)")

    p = _Parser(prog="garside", description="Garside group computations.", parents=[fmt])
    p.add_argument("--structure", default="braid:4", help="braid:<n> or zn:<n> (default braid:4)")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search step limit")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_, *positional):
        sp = sub.add_parser(name, help=help_, parents=[fmt])
        for arg in positional:
            sp.add_argument(arg)
        sp.set_defaults(func=func)
        return sp

    add("nf", cmd_nf, "left normal form", "word")
    add("eq", cmd_eq, "equality in the group", "x", "y")
    add("conj", cmd_conj, "conjugacy with witness w, w^-1 x w = y", "x", "y")
    add("sss", _set_cmd("super"), "super summit set", "word")
    add("uss", _set_cmd("ultra"), "ultra summit set", "word")
    add("stable", _set_cmd("stable"), "stable super summit set", "word")
    g = add("graph", cmd_graph, "summit set with minimal conjugacy edges", "word")
    g.add_argument("--set", choices=conjugacy.KINDS, default="super")
    add("translation", cmd_translation, "translation number as a fraction", "word")

    b = add("abelian-basis", cmd_abelian_basis, "basis of a commuting set")
    b.add_argument("gens", nargs="+")
    for name, func, help_ in (
        ("abelian-member", cmd_abelian_member, "exponents of an element over the generators"),
        ("abelian-conj-member", cmd_abelian_conj_member, "conjugate of an element in the subgroup"),
    ):
        sp = add(name, func, help_, "word")
        sp.add_argument("gens", nargs="+")
    for name, func, help_ in (
        ("abelian-equal", cmd_abelian_equal, "whether two commuting sets generate the same subgroup"),
        ("abelian-conjugate", cmd_abelian_conjugate, "conjugator between two abelian subgroups"),
    ):
        sp = add(name, func, help_)
        sp.add_argument("--first", nargs="+", action="extend", required=True)
        sp.add_argument("--second", nargs="+", action="extend", required=True)

    r = add("report", cmd_report, "write summit graphs (PNG, DOT) and a JSON report", "word")
    r.add_argument("--out", default="report")
    r.add_argument("--sets", nargs="+", choices=conjugacy.KINDS, default=list(conjugacy.KINDS))
    return p


def run(argv: Sequence[str]) -> tuple[int, str, str]:
    """Run one command; returns ``(exit_status, stdout, stderr)``."""
    parser = build_parser()
    out, err = io.StringIO(), io.StringIO()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(list(argv))
        ctx = Context(structure_from_selector(args.structure), Budget(args.budget), getattr(args, "dot", False))
        if ctx.dot and args.command != "graph":
            raise InputError("--dot applies to the graph command only")
        result = args.func(ctx, args)
    except SystemExit as e:  # --help
        return int(e.code or 0), out.getvalue(), err.getvalue()
    except InputError as e:
        return EXIT_USAGE, "", f"error: {e}\n"
    except BudgetExceeded as e:
        return EXIT_BUDGET, "", f"budget exceeded: {e}\n"
    except MathDomainError as e:
        return EXIT_DOMAIN, "", f"domain error: {e}\n"
    if isinstance(result, str):
        return EXIT_OK, result, ""
    return EXIT_OK, json.dumps(result, separators=(",", ":")) + "\n", ""


def main(argv: Sequence[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
