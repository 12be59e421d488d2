"""Command-line front end: count checks, registers, the filter pipeline, benchmarks.

Exit codes: 0 success, 1 semantic failure, 2 usage or input error, 3 internal error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from decimal import Decimal
from typing import Optional

from .conjoin import FilterStats, filter_product, sci, sci_count
from .lexicon import (CoordinationError, LexiconError, UnknownWord, enumerate_side,
                      load_lexicon, possible_assignments_count, split_coordination,
                      tokenize)
from .occurrence import Side, saturate
from .oracle import coord_derive
from .typealg import (TypeSyntaxError, as_basic, basics_of, count_invariance_holds,
                      count_seq, format_type, parse_type)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

COLUMNS = ("L", "PA", "CP", "CP/PA%", "AA", "AA/CP%", "AA/PA%")


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    length: int
    stats: FilterStats
    oracle_confirmed: Optional[int] = None
    truncated_left: bool = False
    truncated_right: bool = False
    timing_ms: dict = field(default_factory=dict)

    @property
    def truncated(self) -> bool:
        return self.truncated_left or self.truncated_right

    def cells(self) -> list:
        pct = [("" if p is None else sci(p)) for p in self.stats.percentages()]
        st = self.stats
        return [str(self.length), sci_count(st.pa), sci_count(st.cp), pct[0],
                str(st.aa), pct[1], pct[2]]

    def flags(self) -> str:
        return ",".join(name for name, on in (("truncated-left", self.truncated_left),
                                              ("truncated-right", self.truncated_right)) if on)

    def to_json(self) -> dict:
        st = self.stats
        pct = st.percentages()
        return {
            "length": self.length,
            "pa": st.pa, "ll": st.ll, "rr": st.rr, "cp": st.cp, "aa": st.aa,
            "cp_pa_pct": None if pct[0] is None else float(pct[0]),
            "aa_cp_pct": None if pct[1] is None else float(pct[1]),
            "aa_pa_pct": None if pct[2] is None else float(pct[2]),
            "row": dict(zip(COLUMNS, self.cells())),
            "oracle_confirmed": self.oracle_confirmed,
            "truncated": {"left": self.truncated_left, "right": self.truncated_right},
            "timing_ms": self.timing_ms,
        }


def format_row(cells) -> str:
    return "\t".join(cells)


def parse_row(line: str) -> list:
    """Read a rendered row: plain cells become ints, scientific cells Decimals.

    Decimals keep the significant digits they were printed with.
    """
    cells = []
    for c in line.split():
        cells.append(Decimal(c) if "e" in c else int(c))
    return cells


def render_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, int):
        return str(v)
    sign, digits, exp = v.as_tuple()
    mantissa = "".join(map(str, digits))
    lead = mantissa[0] + ("." + mantissa[1:] if len(mantissa) > 1 else "")
    return ("-" if sign else "") + f"{lead}e{len(digits) - 1 + exp}"


def render_decimal_row(values) -> str:
    return " ".join(render_cell(v) for v in values)


def run_pipeline(lex, sentence: str, goal, coord: str = "&", cap: Optional[int] = None,
                 oracle: bool = False):
    """Split, enumerate both conjuncts, filter the product and optionally confirm."""
    goal = as_basic(goal)
    words = tokenize(sentence)
    timing = {}
    t0 = time.perf_counter()
    split = split_coordination(words, coord)
    pa = possible_assignments_count(split.left + split.right, lex)
    ll = enumerate_side(split.left, lex, Side.LEFT, cap)
    rr = enumerate_side(split.right, lex, Side.RIGHT, cap)
    t1 = time.perf_counter()
    timing["enumerate"] = round((t1 - t0) * 1000, 3)
    survivors, stats = filter_product(ll.members, rr.members, goal, pa)
    t2 = time.perf_counter()
    timing["filter"] = round((t2 - t1) * 1000, 3)
    confirmed = None
    if oracle:
        confirmed = sum(coord_derive(l.types, r.types, goal)[0] for (l, _), (r, _) in survivors)
        timing["oracle"] = round((time.perf_counter() - t2) * 1000, 3)
    report = RunReport(len(words), stats, confirmed, ll.truncated, rr.truncated, timing)
    return report, survivors


def _parse_types(texts):
    seq = []
    for text in texts:
        for item in text.split():
            seq.append(parse_type(item))
    return tuple(seq)


def _goal(text):
    try:
        return as_basic(text)
    except TypeSyntaxError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_check(args, out) -> int:
    seq = _parse_types(args.types)
    if not seq:
        raise UsageError("no types given")
    goal = _goal(args.goal)
    for x in sorted(basics_of(seq) | {goal}):
        print(f"{x}: {count_seq(x, seq)}", file=out)
    ok = count_invariance_holds(seq, goal)
    print("PASS" if ok else "FAIL", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_registers(args, out) -> int:
    seq = _parse_types(args.types)
    reg, verdict = saturate(seq, Side(args.side))
    if reg.entries:
        print(reg.render(), file=out)
    print(verdict, file=out)
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    left, right = _parse_types([args.left]), _parse_types([args.right])
    if not left or not right:
        raise UsageError("both conjuncts need at least one type")
    ok, witness = coord_derive(left, right, _goal(args.goal))
    print(f"DERIVABLE {witness}" if ok else "NOT DERIVABLE", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _header(oracle, flags):
    cols = list(COLUMNS)
    if oracle:
        cols.append("OC")
    if flags:
        cols.append("flags")
    return cols


def _tsv_cells(report, oracle, flags):
    cells = report.cells()
    if oracle:
        cells.append(str(report.oracle_confirmed))
    if flags:
        cells.append(report.flags())
    return cells


def cmd_filter(args, out) -> int:
    lex = load_lexicon(_read(args.lexicon))
    report, _ = run_pipeline(lex, args.sentence, _goal(args.goal), args.coord, args.cap,
                             args.oracle == "on")
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2), file=out)
    else:
        oracle, flags = args.oracle == "on", report.truncated
        print(format_row(_header(oracle, flags)), file=out)
        print(format_row(_tsv_cells(report, oracle, flags)), file=out)
    return EXIT_OK


def cmd_bench(args, out) -> int:
    lex = load_lexicon(_read(args.lexicon))
    goal = _goal(args.goal)
    oracle = args.oracle == "on"
    rows = []
    start = time.perf_counter()
    for line in _read(args.sentences).splitlines():
        if not line.strip():
            continue
        try:
            report, _ = run_pipeline(lex, line, goal, args.coord, args.cap, oracle)
            rows.append((line, report, None))
        except (CoordinationError, UnknownWord, TypeSyntaxError, ValueError) as exc:
            rows.append((line, None, str(exc)))
    total_ms = round((time.perf_counter() - start) * 1000, 3)
    failed = any(err for _, _, err in rows)

    if args.format == "json":
        doc = {"rows": [{"sentence": s, **(r.to_json() if r else {"error": e})}
                        for s, r, e in rows],
               "aggregate": {"sentences": len(rows), "errors": sum(1 for *_, e in rows if e),
                             "total_ms": total_ms}}
        print(json.dumps(doc, indent=2), file=out)
    elif rows:
        flags = any(r and r.truncated for _, r, _ in rows)
        print(format_row(_header(oracle, flags)), file=out)
        for _, report, err in rows:
            if report is None:
                print(f"# error: {err}", file=out)
            else:
                print(format_row(_tsv_cells(report, oracle, flags)), file=out)
        print(f"# sentences={len(rows)} total_ms={total_ms}", file=out)
    return EXIT_USAGE if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coordcount",
                                     description="Count-based pruning of coordinated type assignments.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="count invariance of a type sequence")
    p.add_argument("types", nargs="+")
    p.add_argument("--goal", default="s")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("registers", help="register and side verdict of one conjunct")
    p.add_argument("types", nargs="+")
    p.add_argument("--side", choices=("left", "right"), required=True)
    p.set_defaults(func=cmd_registers)

    p = sub.add_parser("oracle", help="AB derivability of LEFT & RIGHT")
    p.add_argument("left", help="space-separated types of the left conjunct")
    p.add_argument("right", help="space-separated types of the right conjunct")
    p.add_argument("--goal", default="s")
    p.set_defaults(func=cmd_oracle)

    for name, func in (("filter", cmd_filter), ("bench", cmd_bench)):
        p = sub.add_parser(name, help=f"{name} coordinated sentence(s) against a lexicon")
        p.add_argument("sentence" if name == "filter" else "sentences",
                       help="sentence text" if name == "filter" else "file, one sentence per line")
        p.add_argument("--lexicon", required=True)
        p.add_argument("--goal", default="s")
        p.add_argument("--coord", default="&")
        p.add_argument("--cap", type=int)
        p.add_argument("--format", choices=("tsv", "json"), default="tsv")
        p.add_argument("--oracle", choices=("on", "off"), default="off")
        p.set_defaults(func=func)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except (TypeSyntaxError, LexiconError, UsageError, CoordinationError, UnknownWord) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - last resort
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
