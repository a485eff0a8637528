"""Command-line front end: ``necklaces count|verify|enumerate|sweep``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
3 resource limit exceeded.  Counts are always printed as exact decimal
(or fraction) strings.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from fractions import Fraction

from . import closedform, cycleindex, orbits
from .closedform import ColorMultiplicities, Mode
from .errors import ResourceLimitError
from .orbits import SymmetryGroup
from .verify import GROUPS, cycle_index, shapes, sweep, verify

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3

CSV_HEADER = ["counts", "N", "group", "mode", "case", "method", "value"]
METHODS = ("closed_form", "cycle_index", "brute_force")

COUNT_REPORT_SCHEMA = {
    "type": "object",
    "required": ["counts", "N", "group", "mode", "case", "method", "value", "diagnostic"],
    "additionalProperties": False,
    "properties": {
        "counts": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "N": {"type": "integer", "minimum": 1},
        "group": {"enum": ["cyclic", "dihedral"]},
        "mode": {"enum": ["corrected", "paper_literal"]},
        "case": {"type": ["string", "null"]},
        "method": {"enum": list(METHODS)},
        "value": {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"},
        "diagnostic": {"type": "boolean"},
    },
}


class UsageError(Exception):
    pass


def _check_mode(mode: Mode, method: str) -> None:
    if mode is Mode.PAPER_LITERAL and method != "closed_form":
        raise UsageError("paper-literal mode only applies to the closed_form method")


def parse_counts(text: str) -> tuple[int, ...]:
    try:
        counts = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if any(c < 0 for c in counts):
        raise argparse.ArgumentTypeError(f"bead counts must be nonnegative: {text!r}")
    if not any(counts):
        raise argparse.ArgumentTypeError("at least one bead count must be positive")
    return counts


def _choice(text: str) -> str:
    return text.replace("-", "_")


def _groups(name: str) -> list[SymmetryGroup]:
    return list(GROUPS) if name == "both" else [SymmetryGroup(name)]


_CHUNK = 10**1000


def _decimal(v: int) -> str:
    # str(int) refuses very long results on Python >= 3.10.7; go 1000 digits at a time
    if v < 0:
        return "-" + _decimal(-v)
    parts = []
    while v >= _CHUNK:
        v, r = divmod(v, _CHUNK)
        parts.append(f"{r:01000d}")
    return str(v) + "".join(reversed(parts))


def exact(value) -> str:
    """Exact decimal or ``p/q`` string for an int or Fraction."""
    if isinstance(value, float):
        raise TypeError("counts must never pass through floating point")
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return _decimal(value.numerator)
        return f"{_decimal(value.numerator)}/{_decimal(value.denominator)}"
    return _decimal(int(value))


def count_report(counts, group: SymmetryGroup, mode: Mode, method: str,
                 limit_terms=None, limit_words=None) -> dict:
    n = ColorMultiplicities(counts)
    dihedral = group is SymmetryGroup.DIHEDRAL
    if method == "closed_form":
        value = closedform.count_dihedral(n, mode) if dihedral else closedform.count_cyclic(n)
    elif method == "cycle_index":
        value = cycleindex.extract_count(cycle_index(n.N, len(counts), group, limit_terms), counts)
    else:
        value = orbits.count_orbits(n, group, limit_words)
    return {
        "counts": list(counts),
        "N": n.N,
        "group": group.value,
        "mode": mode.value,
        "case": closedform.classify_dihedral_case(n).value if dihedral else None,
        "method": method,
        "value": exact(value),
        "diagnostic": mode is Mode.PAPER_LITERAL,
    }


def _csv_row(report: dict) -> list:
    return [
        ",".join(str(c) for c in report["counts"]), report["N"], report["group"],
        report["mode"], report["case"] or "", report["method"], report["value"],
    ]


def cmd_count(args, out) -> int:
    mode = Mode.parse(args.mode)
    _check_mode(mode, args.method)
    reports = [
        count_report(args.counts, g, mode, args.method, args.limit_terms, args.limit_words)
        for g in _groups(args.group)
    ]
    if args.format == "json":
        for r in reports:
            out.write(json.dumps(r) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in reports:
            w.writerow(_csv_row(r))
    else:
        for r in reports:
            line = (
                f"{r['group']} counts={','.join(map(str, r['counts']))} N={r['N']} "
                f"mode={r['mode']} case={r['case'] or '-'} method={r['method']} value={r['value']}"
            )
            if r["diagnostic"]:
                line += "  [diagnostic: literal formula, not a verified count]"
            out.write(line + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    groups = _groups(args.group)
    report = verify(
        shapes(args.max_n, args.colors), groups, args.mode, args.limit_terms, args.limit_words
    )
    if args.format == "json":
        payload = {
            "max_n": args.max_n,
            "colors": args.colors,
            "mode": Mode.parse(args.mode).value,
            "checked": {g.value: report.checked[g] for g in groups},
            "case_hits": {c.value: report.case_hits[c] for c in closedform.DihedralCase},
            "mismatches": [
                {
                    "counts": list(mm.counts),
                    "group": mm.group.value,
                    "case": mm.case.value if mm.case else None,
                    "closed_form": exact(mm.closed_form),
                    "cycle_index": exact(mm.cycle_index),
                    "brute_force": exact(mm.brute_force),
                }
                for mm in report.mismatches
            ],
            "ok": report.ok,
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(f"{'group':10s} {'checked':>8s} {'mismatches':>11s}\n")
        for g in groups:
            bad = sum(1 for mm in report.mismatches if mm.group is g)
            out.write(f"{g.value:10s} {report.checked[g]:8d} {bad:11d}\n")
        if SymmetryGroup.DIHEDRAL in groups:
            out.write("dihedral case hits:\n")
            for c in closedform.DihedralCase:
                out.write(f"  {c.value:16s} {report.case_hits[c]:6d}\n")
        if report.mismatches:
            out.write("mismatches:\n")
            for mm in report.mismatches:
                out.write("  " + mm.describe() + "\n")
        out.write("OK\n" if report.ok else "FAILED\n")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_enumerate(args, out) -> int:
    n = ColorMultiplicities(args.counts)
    # map stripped color indices back to positions in the given tuple
    labels = [i for i, c in enumerate(n.source) if c > 0]
    width = len(n.source)
    sections = []
    for g in _groups(args.group):
        words = [
            tuple(labels[b] for b in w) for w in orbits.representatives(n, g, args.limit_words)
        ]
        sections.append((g, [orbits.format_word(w, width) for w in words]))
    if args.format == "json":
        for g, words in sections:
            out.write(json.dumps({
                "counts": list(args.counts), "group": g.value,
                "representatives": words, "total": str(len(words)),
            }) + "\n")
    else:
        for g, words in sections:
            if len(sections) > 1:
                out.write(f"# {g.value}\n")
            for w in words:
                out.write(w + "\n")
            out.write(f"total={len(words)}\n")
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    mode = Mode.parse(args.mode)
    _check_mode(mode, args.method)
    limit = args.limit_terms if args.limit_terms is not None else cycleindex.DEFAULT_LIMIT_TERMS
    rows_needed = math.comb(args.n + args.m - 1, args.m - 1)
    if rows_needed > limit:
        raise ResourceLimitError(f"{rows_needed} compositions exceed the limit {limit}")
    for g in _groups(args.group):
        rows, total = sweep(
            args.n, args.m, g, mode, args.method, args.partitions,
            args.limit_terms, args.limit_words,
        )
        diagnostic = mode is Mode.PAPER_LITERAL
        if args.format == "json":
            out.write(json.dumps({
                "N": args.n, "m": args.m, "group": g.value, "mode": mode.value,
                "method": args.method, "partitions": args.partitions,
                "rows": [
                    {"counts": list(r.counts), "case": r.case.value if r.case else None,
                     "value": exact(r.value), "multiplicity": r.multiplicity}
                    for r in rows
                ],
                "total": exact(total), "diagnostic": diagnostic,
            }) + "\n")
        elif args.format == "csv":
            w = csv.writer(out, lineterminator="\n")
            w.writerow(CSV_HEADER)
            for r in rows:
                w.writerow([
                    ",".join(map(str, r.counts)), args.n, g.value, mode.value,
                    r.case.value if r.case else "", args.method, exact(r.value),
                ])
            w.writerow(["total", args.n, g.value, mode.value, "", args.method, exact(total)])
        else:
            out.write(f"# {g.value} N={args.n} m={args.m}\n")
            for r in rows:
                label = "(" + ",".join(map(str, r.counts)) + ")"
                if args.partitions:
                    label += f" x{r.multiplicity}"
                out.write(f"{label}: {exact(r.value)}\n")
            out.write(f"total: {exact(total)}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="necklaces",
        description="Exact counts of necklaces and bracelets with fixed bead counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def limits(p):
        p.add_argument("--limit-terms", type=int, default=None,
                       help="max monomials in an expanded cycle index (default 10^7)")
        p.add_argument("--limit-words", type=int, default=None,
                       help="max arrangements to enumerate (default 10^8, env NECKLACE_LIMIT_WORDS)")

    def common(p, group_default):
        p.add_argument("--group", choices=["cyclic", "dihedral", "both"], default=group_default)
        p.add_argument("--mode", type=_choice, choices=["corrected", "paper_literal"],
                       default="corrected")

    p = sub.add_parser("count", help="count necklaces for one tuple of bead counts")
    p.add_argument("--counts", type=parse_counts, required=True)
    common(p, "cyclic")
    p.add_argument("--method", type=_choice, choices=METHODS, default="closed_form")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    limits(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="cross-check closed form, cycle index and brute force")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--colors", type=int, default=3)
    common(p, "both")
    p.add_argument("--format", choices=["text", "json"], default="text")
    limits(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list one canonical word per class")
    p.add_argument("--counts", type=parse_counts, required=True)
    p.add_argument("--group", choices=["cyclic", "dihedral", "both"], default="cyclic")
    p.add_argument("--format", choices=["text", "json"], default="text")
    limits(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sweep", help="count every m-part composition of N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    common(p, "cyclic")
    p.add_argument("--method", type=_choice, choices=METHODS, default="closed_form")
    p.add_argument("--partitions", action="store_true",
                   help="collapse rows that differ only by a permutation of colors")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    limits(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for name in ("max_n", "colors", "n", "m"):
        if getattr(args, name, 1) < 1:
            print(f"necklaces: --{name.replace('_', '-')} must be at least 1", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"necklaces: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"necklaces: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
