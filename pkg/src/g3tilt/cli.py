"""Command-line interface: ``g3tilt classify|tilting|projective|jh|verify|emit``.

Exit status is 0 on success, 1 when a verification case fails and 2 on
malformed input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from collections import Counter
from typing import Optional, Sequence

from .blocks import Atypical, ClassificationError, canonical_w, classify, f, label
from .charlib import Unknown
from .formulas import _canonical, jordan_holder, projective, tilting
from .symbols import Symbol, parse_symbol
from .verify import SUITES, run
from .weyl import WeylElt, act, parse_word

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(", ", ": "))


def _label_dict(n: int, w: WeylElt) -> dict:
    return {"n": n, "w": str(w)}


def table_row(kind: str, k: int, n: int, w: WeylElt) -> dict:
    """One table entry in the fixed JSON shape; an open case carries ``"unknown": true``."""
    w = canonical_w(k, n, w)
    out = {"block": k, "label": _label_dict(n, w)}
    try:
        if kind == "jh":
            items = _jh_items(k, n, w)
        else:
            char = (tilting if kind == "tilting" else projective)(k, n, w)
            items = [(s, m) for s, m in sorted(char.items())]
    except Unknown as e:
        out["unknown"] = True
        out["reason"] = str(e)
        return out
    flag = []
    for s, m in items:
        lab = label(s)
        flag.append({"symbol": list(s.as_tuple()), "mult": m,
                     "label": _label_dict(lab.n, lab.rep)})
    out["flag"] = flag
    return out


def _jh_items(k: int, n: int, w: WeylElt) -> list[tuple[Symbol, int]]:
    counts: Counter = Counter()
    for lab, m in jordan_holder(k, n, w).items():
        counts[act(lab.rep, f(lab.k, lab.n))] += m
    return sorted(counts.items())


_CSV_HEADER = ["table", "block", "n", "w", "d2", "x2", "y2", "z2", "mult", "term_n", "term_w"]


def _csv_rows(kind: str, row: dict) -> list[list]:
    lab = row["label"]
    if row.get("unknown"):
        return [[kind, row["block"], lab["n"], lab["w"], "", "", "", "", "unknown", "", ""]]
    return [[kind, row["block"], lab["n"], lab["w"], *e["symbol"], e["mult"],
             e["label"]["n"], e["label"]["w"]] for e in row["flag"]]


def _csv(rows: list[tuple[str, dict]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_HEADER)
    for kind, row in rows:
        writer.writerows(_csv_rows(kind, row))
    return buf.getvalue()


def _tex_half(v: int) -> str:
    if v % 2 == 0:
        return str(v // 2)
    sign = "-" if v < 0 else ""
    return f"{sign}\\frac{{{abs(v)}}}{{2}}"


def _tex_symbol(sym: Sequence[int]) -> str:
    d, x, y, z = (_tex_half(v) for v in sym)
    return f"$[{d} \\mid {x}, {y}, {z}]$"


_TEX_NAME = {"tilting": "T", "projective": "P", "jh": "M"}


def _tex(rows: list[tuple[str, dict]]) -> str:
    lines = ["\\begin{tabular}{llrl}", "module & term & mult & label \\\\", "\\hline"]
    for kind, row in rows:
        lab = row["label"]
        head = f"${_TEX_NAME[kind]}_{{{lab['n']}}}^{{{lab['w']}}}$ (B{row['block']})"
        if row.get("unknown"):
            lines.append(f"{head} & unknown & & \\\\")
            continue
        for i, e in enumerate(row["flag"]):
            term = "L" if kind == "jh" else "M"
            t = f"${term}_{{{e['label']['n']}}}^{{{e['label']['w']}}}$"
            lines.append(f"{head if i == 0 else ''} & {_tex_symbol(e['symbol'])} & "
                         f"{e['mult']} & {t} \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def render(rows: list[tuple[str, dict]], fmt: str, block: Optional[int] = None) -> str:
    if fmt == "csv":
        return _csv(rows)
    if fmt == "tex":
        return _tex(rows)
    if block is None:
        return _dump(rows[0][1]) + "\n"
    out = {"block": block}
    for kind in ("tilting", "projective", "jh"):
        out[kind] = [r for kd, r in rows if kd == kind]
    return _dump(out) + "\n"


def _word(text: str) -> WeylElt:
    try:
        return parse_word(text)
    except ValueError as e:
        raise InputError(str(e)) from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def cmd_classify(args) -> int:
    try:
        s = parse_symbol(args.symbol)
        b = classify(s)
    except (ValueError, ClassificationError) as e:
        raise InputError(str(e)) from None
    if isinstance(b, Atypical):
        print(_dump(label(s).as_dict()))
    else:
        print(_dump({"block": "typical", "rep": list(b.rep.as_tuple())}))
    return EXIT_OK


def cmd_table(args) -> int:
    row = table_row(args.command, args.k, args.n, _word(args.word))
    sys.stdout.write(render([(args.command, row)], args.format))
    return EXIT_OK


def cmd_emit(args) -> int:
    k = args.block
    nmax = 3 * k + 8 if args.nmax is None else args.nmax
    rows = []
    for kind in ("tilting", "projective", "jh"):
        for n in range(nmax + 1):
            for w in _canonical(k, n):
                rows.append((kind, table_row(kind, k, n, w)))
    sys.stdout.write(render(rows, args.format, block=k))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run(args.suite, args.kmax, args.nmax)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(json.dumps(report.as_dict(), indent=1) + "\n")
    for suite, counts in report.summary().items():
        print(f"{suite:22s} pass {counts['pass']:5d}  fail {counts['fail']:3d}  "
              f"skipped-unknown {counts['skipped-unknown']:3d}")
    for c in report.failed:
        print("FAIL", _dump(c.as_dict()))
    for name, secs in report.timing.items():
        print(f"{name}: {secs:.1f}s", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="g3tilt", description="Tilting, projective and "
                                "composition tables for category O of G(3).")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="block and label of a symbol like '[-3/2|0,-3/2,3/2]'")
    c.add_argument("symbol")
    c.set_defaults(func=cmd_classify)

    for name, what in (("tilting", "Verma flag of a tilting module"),
                       ("projective", "Verma flag of a projective cover"),
                       ("jh", "composition factors of a Verma module")):
        t = sub.add_parser(name, help=what)
        t.add_argument("k", type=_nonneg)
        t.add_argument("n", type=_nonneg)
        t.add_argument("word", help="group element such as e, 12, 0w0, 021212")
        t.add_argument("--format", choices=("json", "csv", "tex"), default="json")
        t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    v.add_argument("--kmax", type=_nonneg, default=5)
    v.add_argument("--nmax", type=_nonneg, default=None, help="default 3k+8 per block")
    v.add_argument("--json", metavar="PATH", help="write the full report here")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("emit", help="all tables of one block")
    e.add_argument("--block", type=_nonneg, required=True)
    e.add_argument("--nmax", type=_nonneg, default=None)
    e.add_argument("--format", choices=("json", "csv", "tex"), default="json")
    e.set_defaults(func=cmd_emit)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except BrokenPipeError:
        # reader went away (e.g. piped into head); keep the interpreter quiet on exit
        sys.stdout = open(os.devnull, "w")
        return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
