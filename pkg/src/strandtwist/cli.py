"""
Command Line Interface
======================

``strandtwist <command> ...``; results are JSON lines (CSV for slope tables
and census summaries).

Exit codes: 0 success, 1 a checked claim failed, 2 bad input.
"""

import argparse
import csv
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence, TextIO, Tuple

import numpy as np

from strandtwist.census.checks import random_unknot_bandings, unknot_banding_check, verify_worked_examples
from strandtwist.census.runner import census
from strandtwist.census.tables import load_table
from strandtwist.config import RunConfig, SimplifyBudget
from strandtwist.diagram.core import UNKNOT, format_pd, parse_pd
from strandtwist.diagram.types import PlanarDiagram
from strandtwist.errors import KnotEngineError
from strandtwist.fixtures import builtin, builtin_names, clasp_band, trivial_band_case
from strandtwist.invariants.bracket import jones
from strandtwist.invariants.goeritz import branched_cover_homology, determinant
from strandtwist.slopes import SLOPE_COLUMNS, slope_table
from strandtwist.tangle.bands import Band
from strandtwist.tangle.sites import TwistSite, find_twist_sites, two_strand_twist

logger = logging.getLogger(__name__)

DEFAULT_CENSUS = ("clasp", "trefoil", "figure-eight")
EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Bad command line input; maps to exit code 2."""


def _knots(spec: str) -> List[Tuple[str, PlanarDiagram]]:
    """A table file, or a builtin knot name."""
    path = Path(spec)
    if path.is_file():
        return load_table(path)
    return [(spec, builtin(spec))]


def _one_knot(spec: str) -> Tuple[str, PlanarDiagram]:
    table = _knots(spec)
    if not table:
        raise InputError(f"{spec} holds no knots")
    if len(table) > 1:
        logger.warning("%s holds %d knots; using the first", spec, len(table))
    return table[0]


def _n_range(text: Optional[str], default: Tuple[int, int]) -> Tuple[int, int]:
    """"n", "a:b" or "a..b"."""
    if text is None:
        return default
    for sep in (":", ".."):
        if sep in text:
            lo, hi = text.split(sep, 1)
            return int(lo), int(hi)
    return int(text), int(text)


def _budget(args) -> SimplifyBudget:
    return SimplifyBudget(time_bound=args.budget) if args.budget is not None else SimplifyBudget()


def _emit(out: TextIO, payload) -> None:
    out.write(json.dumps(payload, sort_keys=True) + "\n")


# ============================================================================
# Commands
# ============================================================================

def cmd_twist(args, out: TextIO) -> int:
    name, d = _one_knot(args.knot)
    if args.site is None:
        for s in find_twist_sites(d):
            _emit(out, {"knot": name, "site": s.address()})
        return EXIT_OK
    if args.n is None:
        raise InputError("twist needs --n")
    site = TwistSite.parse(args.site)
    result = two_strand_twist(d, site, int(args.n))
    _emit(out, {"knot": name, "site": site.address(), "n": int(args.n),
                "crossings": result.n_crossings, "pd": format_pd(result)})
    return EXIT_OK


def cmd_jones(args, out: TextIO) -> int:
    name, d = _one_knot(args.knot)
    _emit(out, {"knot": name, "jones": jones(d, args.max_crossings).format("t")})
    return EXIT_OK


def cmd_det(args, out: TextIO) -> int:
    name, d = _one_knot(args.knot)
    _emit(out, {"knot": name, "determinant": determinant(d)})
    return EXIT_OK


def cmd_cover(args, out: TextIO) -> int:
    name, d = _one_knot(args.knot)
    _emit(out, {"knot": name, "homology": str(branched_cover_homology(d))})
    return EXIT_OK


def cmd_slopes(args, out: TextIO) -> int:
    lo, hi = _n_range(args.n, (-6, 6))
    writer = csv.DictWriter(out, fieldnames=SLOPE_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(slope_table(range(lo, hi + 1)))
    return EXIT_OK


def cmd_census(args, out: TextIO) -> int:
    lo, hi = _n_range(args.n, (-3, 3))
    try:
        cfg = RunConfig(n_min=lo, n_max=hi, max_crossings=args.max_crossings,
                        budget=_budget(args), input_path=args.knots,
                        output_path=args.out, resume=args.resume,
                        **({"workers": args.workers} if args.workers else {}))
    except AssertionError as exc:
        raise InputError(f"invalid census configuration: {exc}") from exc
    table = []
    for spec in ([args.knots] if args.knots else DEFAULT_CENSUS):
        table.extend(_knots(spec))
    records = census(table, cfg)
    if not args.out:
        for r in records:
            out.write(r.to_json() + "\n")
    return EXIT_OK


def _write_report(report, out: TextIO, path: Optional[str]) -> None:
    for line in report.lines():
        out.write(line + "\n")
    if path:
        with open(path, "w") as f:
            for claim in report.claims:
                _emit(f, claim.as_dict())


def cmd_verify_examples(args, out: TextIO) -> int:
    report = verify_worked_examples(_budget(args))
    _write_report(report, out, args.out)
    return EXIT_OK if report.passed else EXIT_FAILED


def load_bandings(path: str) -> List[Tuple[PlanarDiagram, Band]]:
    """
    Band records, one JSON object per line: the band fields of
    ``Band.to_record`` plus "knot" (builtin name or table file) or "pd"
    (PD code). Blank lines and "#" comments are skipped.
    """
    bandings = []
    with open(path) as f:
        for lineno, line in enumerate(f, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                record = json.loads(line)
                d = parse_pd(record["pd"]) if "pd" in record else \
                    _one_knot(record.get("knot", "unknot"))[1]
                bandings.append((d, Band.from_record(record)))
            except (KeyError, TypeError, AssertionError) as exc:
                raise InputError(f"{path}:{lineno}: bad band record ({exc!r})") from exc
    if not bandings:
        raise InputError(f"{path} holds no band records")
    return bandings


def cmd_banding_check(args, out: TextIO) -> int:
    budget = _budget(args)
    if args.bands:
        bandings = load_bandings(args.bands)
    else:
        bandings = [clasp_band(), trivial_band_case(UNKNOT)]
        bandings += random_unknot_bandings(args.count, np.random.default_rng(args.seed), budget=budget)
    report, verdicts = unknot_banding_check(bandings, budget)
    _write_report(report, out, None)
    if args.out:
        with open(args.out, "w") as f:
            for v in verdicts:
                _emit(f, v.as_dict())
    return EXIT_OK if report.passed else EXIT_FAILED


COMMANDS = {
    "twist": cmd_twist,
    "jones": cmd_jones,
    "det": cmd_det,
    "cover": cmd_cover,
    "slopes": cmd_slopes,
    "census": cmd_census,
    "verify-examples": cmd_verify_examples,
    "banding-check": cmd_banding_check,
}

# earlier command names
ALIASES = {"verify-paper": "verify-examples", "theorem3-check": "banding-check"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strandtwist",
        description="Two-strand twists on knot diagrams",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s jones figure-eight
  %(prog)s twist clasp                          # list twist sites
  %(prog)s twist clasp --site site=A,B,FACE --n -1
  %(prog)s slopes --n=-6:6
  %(prog)s census knots.txt --n=-2:2 --out census.jsonl
  %(prog)s verify-examples
  %(prog)s banding-check --count 100 --seed 0
  %(prog)s banding-check --bands bands.jsonl
        """,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, knot: bool = True):
        if knot:
            p.add_argument("knot", help="PD/DT table file or builtin name: "
                           + ", ".join(builtin_names()))
        p.add_argument("--max-crossings", type=int, default=24,
                       help="Crossing limit for the Jones polynomial")
        p.add_argument("--budget", type=float, default=None,
                       help="Simplification time bound in seconds")
        p.add_argument("--out", type=str, default=None, help="Output file")

    p = sub.add_parser("twist", help="Apply a two-strand twist")
    common(p)
    p.add_argument("--site", type=str, help='Site address "site=a,b,face"')
    p.add_argument("--n", type=int, help="Twist order (nonzero)")

    for name, text in (("jones", "Jones polynomial"), ("det", "Determinant"),
                       ("cover", "Double branched cover homology")):
        common(sub.add_parser(name, help=text))

    p = sub.add_parser("slopes", help="Surgery slope table")
    common(p, knot=False)
    p.add_argument("--n", type=str, help='Twist order or range "a:b" (default -6:6)')

    p = sub.add_parser("census", help="Cosmetic twist candidate search")
    p.add_argument("knots", nargs="?", default=None, help="Knot table (default: builtin knots)")
    common(p, knot=False)
    p.add_argument("--n", type=str, help='Twist range "a:b" (default -3:3)')
    p.add_argument("--workers", type=int, default=None, help="Worker processes")
    p.add_argument("--resume", action="store_true", help="Continue a partial report")

    p = sub.add_parser("verify-examples", aliases=["verify-paper"],
                       help="Check the worked twisting examples")
    common(p, knot=False)

    p = sub.add_parser("banding-check", aliases=["theorem3-check"],
                       help="Order-one twists on the unknot")
    common(p, knot=False)
    p.add_argument("--count", type=int, default=100, help="Random bandings")
    p.add_argument("--seed", type=int, default=0, help="Random seed")
    p.add_argument("--bands", type=str, default=None,
                   help="JSON lines of band records to check instead of random bandings")
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    out = out or sys.stdout
    command = ALIASES.get(args.command, args.command)
    redirect = command in ("twist", "jones", "det", "cover", "slopes") and args.out
    try:
        if redirect:
            with open(args.out, "w", newline="") as f:
                return COMMANDS[command](args, f)
        return COMMANDS[command](args, out)
    except (KnotEngineError, InputError, OSError, ValueError) as exc:
        print(f"strandtwist: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
