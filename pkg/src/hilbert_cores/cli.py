"""``hilbert-cores`` command line.

Exit codes: 0 success, 1 a verification property failed, 2 bad usage or input.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import core_weyl as cw
from .partitions import is_core, is_symmetric, parse_partition, render, staircase
from .report import FORMATS, Report
from .residues import render_c_residues, res_D, res_E6
from .roots import component_dimension, make_graph, size, tits_form
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _nodes(v) -> str:
    return ",".join(v.graph.nodes)


def cmd_components(n: int, l: int, diagrams: bool = False) -> Report:
    if n < 0 or l < 2:
        raise UsageError("need --n >= 0 and --l >= 2")
    rep = Report("components", {"n": n, "l": l, "diagrams": diagrams})
    for rec in cw.components(n, l):
        row = dict(n=rec.n, l=rec.l, core=str(rec.core), residue=str(rec.d), wt=rec.wt, dim=rec.dim)
        if diagrams:
            row["diagram"] = render(rec.core)
        rep.add(**row)
    rep.notes.append("nodes: " + ",".join(make_graph("D-affine", l).nodes))
    return rep


def cmd_residue(literal: str | None, l: int | None, e6: int | None, diagrams: bool = False) -> Report:
    if e6 is not None:
        if literal:
            raise UsageError("give either a partition literal or --e6, not both")
        if e6 < 0:
            raise UsageError("--e6 needs m >= 0")
        v = res_E6(e6)
        rep = Report("residue", {"e6": e6})
        rep.add(graph="E6-affine", partition=str(staircase(e6)), size=size(v), nodes=_nodes(v),
                residue=str(v), tits=tits_form(v))
        return rep
    if l is None or l < 2:
        raise UsageError("type D residues need --l >= 2")
    lam = parse_partition(literal or "")
    v = res_D(lam, l)
    rep = Report("residue", {"partition": literal or "", "l": l, "diagrams": diagrams})
    row = dict(graph="D-affine", partition=str(lam), size=size(v), nodes=_nodes(v), residue=str(v),
               wt=str(cw.wt(v)), core=str(cw.epsilon(v).core))
    if diagrams:
        row["c_residues"] = render_c_residues(lam, l)
    rep.add(**row)
    return rep


def cmd_verify(suite: str) -> Report:
    checks = run_suite(suite)
    rep = Report("verify", {"suite": suite})
    for c in checks:
        rep.add(**c.to_json())
    rep.ok = all(c.passed for c in checks)
    failed = sum(not c.passed for c in checks)
    rep.notes.append(f"{len(checks) - failed}/{len(checks)} properties passed")
    return rep


def parse_word(text: str, l: int) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        word = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"not a comma list of generator indices: {text!r}") from None
    bad = [i for i in word if not 0 <= i <= l]
    if bad:
        raise UsageError(f"generator {bad[0]} outside [0, {l}]")
    return word


def cmd_orbit(l: int, word: str, start: str = "empty") -> Report:
    if l < 2:
        raise UsageError("need --l >= 2")
    gens = parse_word(word, l)
    lam = parse_partition(start)
    if not (is_symmetric(lam) and is_core(lam, 2 * l)):
        raise UsageError(f"start {lam} is not a symmetric {2 * l}-core")
    rep = Report("orbit", {"l": l, "word": word, "start": start})
    rep.add(step=0, generator=None, core=str(lam), size=lam.size, diagram=render(lam))
    for step, i in enumerate(gens, 1):
        lam = cw.apply_generator(lam, i, l)
        rep.add(step=step, generator=i, core=str(lam), size=lam.size, diagram=render(lam))
    return rep


def _ranges(values: list[int]) -> str:
    out, i = [], 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and values[j + 1] == values[j] + 1:
            j += 1
        out.append(str(values[i]) if i == j else f"{values[i]}-{values[j]}")
        i = j + 1
    return ", ".join(out)


def cmd_e6_report(max_m: int) -> Report:
    if max_m < 0:
        raise UsageError("--max-m must be >= 0")
    rep = Report("e6-report", {"max_m": max_m})
    triangular = set()
    for m in range(max_m + 1):
        v = res_E6(m)
        n = m * (m + 1) // 2
        triangular.add(n)
        rep.add(m=m, n=n, residue=str(v), tits=tits_form(v), chi0=v["chi0"], dim=component_dimension(v))
    gaps = [n for n in range(max_m * (max_m + 1) // 2 + 1) if n not in triangular]
    if gaps:
        rep.notes.append(f"n in {{{_ranges(gaps)}}}: no T₁-fixed component")
    rep.notes.append(f"nodes: {_nodes(res_E6(0))}")
    return rep


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")

    parser = argparse.ArgumentParser(prog="hilbert-cores",
                                     description="Components of Gamma-fixed Hilbert schemes via cores and residues.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("components", parents=[common], help="list components containing a torus-fixed point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--diagrams", action="store_true", help="render the core of each record")

    p = sub.add_parser("residue", parents=[common], help="residue vector of a partition")
    p.add_argument("partition", nargs="?", default=None, help='literal such as "4,4,3,2"; empty string for the empty partition')
    p.add_argument("--l", type=int)
    p.add_argument("--e6", type=int, metavar="M", help="staircase (M, M-1, ..., 1) in type E6")
    p.add_argument("--diagrams", action="store_true", help="show the C-residue filling")

    p = sub.add_parser("verify", parents=[common], help="run a property suite")
    p.add_argument("suite", choices=list(SUITES) + ["all"])

    p = sub.add_parser("orbit", parents=[common], help="apply generators to a symmetric core")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--word", default="", help='comma list such as "0,1,0"; the first index acts first')
    p.add_argument("--start", default="empty")

    p = sub.add_parser("e6-report", parents=[common], help="staircase residues in type E6")
    p.add_argument("--max-m", type=int, required=True)
    return parser


def run(args: argparse.Namespace) -> Report:
    if args.command == "components":
        return cmd_components(args.n, args.l, args.diagrams)
    if args.command == "residue":
        return cmd_residue(args.partition, args.l, args.e6, args.diagrams)
    if args.command == "verify":
        return cmd_verify(args.suite)
    if args.command == "orbit":
        return cmd_orbit(args.l, args.word, args.start)
    return cmd_e6_report(args.max_m)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rep = run(args)
    except ValueError as exc:
        print(f"hilbert-cores {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(rep.render(args.format))
    if args.format == "csv" and rep.notes:
        for note in rep.notes:
            print(f"note: {note}", file=sys.stderr)
    return EXIT_OK if rep.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
