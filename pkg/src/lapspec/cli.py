"""Command-line interface.

Subcommands:

    eval           Laplacian energy report for an expression
    spectrum       exact Laplacian spectrum of an expression
    verify-family  check built-in families against their closed forms
    cospectral     compare the spectra of two expressions
    scan           stream a graph6 file and flag L-borderenergetic hits

Exit status: 0 all checks passed / no error, 1 a verification failed,
2 usage or input error.  Exact rationals print as fraction plus a
6-decimal rendering.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .energy import energy_report, is_cospectral
from .expr import ParseError, parse, render
from .families import FAMILY_IDS, family_specs, verify
from .realize import Graph6Error
from .scan import DEFAULT_TOL, scan_file, write_csv, write_jsonl
from .spectrum import spectrum_of

__all__ = ["CommandConfig", "build_parser", "run", "main"]


@dataclass
class CommandConfig:
    """Validated flags for one invocation."""

    subcommand: str
    exprs: tuple[str, ...] = ()
    family_id: str = "all"
    r_max: int = 1
    input_path: str | None = None
    as_json: bool = False
    jsonl_path: str | None = None
    csv_path: str | None = None
    tol: float = DEFAULT_TOL
    jobs: int = 1


def default_jobs() -> int:
    env = os.environ.get("LAPSPEC_JOBS", "")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lapspec",
        description="Exact Laplacian spectra and L-borderenergetic checks for graph expressions.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_eval = sub.add_parser("eval", help="Laplacian energy report for an expression")
    p_eval.add_argument("expr", help="expression text, e.g. '2K2 * 2K2'")
    p_eval.add_argument("--json", action="store_true", help="emit JSON instead of a table")

    p_spec = sub.add_parser("spectrum", help="exact Laplacian spectrum of an expression")
    p_spec.add_argument("expr")
    p_spec.add_argument("--json", action="store_true")

    p_fam = sub.add_parser("verify-family", help="verify built-in families against closed forms")
    p_fam.add_argument("--id", default="all", choices=FAMILY_IDS + ("all",), help="family id or 'all'")
    p_fam.add_argument("--r-max", type=int, required=True, help="verify r = 1..R_MAX")
    p_fam.add_argument("--json", action="store_true", help="one JSON object per verdict line")

    p_cos = sub.add_parser("cospectral", help="compare the spectra of two expressions")
    p_cos.add_argument("expr1")
    p_cos.add_argument("expr2")
    p_cos.add_argument("--json", action="store_true")

    p_scan = sub.add_parser("scan", help="scan a graph6 file for L-borderenergetic graphs")
    p_scan.add_argument("file", help="graph6 input, one record per line")
    p_scan.add_argument("--tol", type=float, default=DEFAULT_TOL, help="numeric hit tolerance")
    p_scan.add_argument("--jobs", type=int, default=None, help="worker processes (default $LAPSPEC_JOBS or 1)")
    p_scan.add_argument("--json", metavar="OUT.JSONL", default=None, help="also write records as JSON lines")
    p_scan.add_argument("--csv", metavar="OUT.CSV", default=None, help="also write records as CSV")

    return parser


def config_from_argv(argv: list[str] | None) -> CommandConfig:
    args = build_parser().parse_args(argv)
    if args.subcommand == "eval":
        return CommandConfig("eval", exprs=(args.expr,), as_json=args.json)
    if args.subcommand == "spectrum":
        return CommandConfig("spectrum", exprs=(args.expr,), as_json=args.json)
    if args.subcommand == "verify-family":
        return CommandConfig("verify-family", family_id=args.id, r_max=args.r_max, as_json=args.json)
    if args.subcommand == "cospectral":
        return CommandConfig("cospectral", exprs=(args.expr1, args.expr2), as_json=args.json)
    return CommandConfig(
        "scan",
        input_path=args.file,
        tol=args.tol,
        jobs=args.jobs if args.jobs is not None else default_jobs(),
        jsonl_path=args.json,
        csv_path=args.csv,
    )


def _fmt_rational(x: Fraction) -> str:
    return f"{x} ({float(x):.6f})"


def _fmt_bool(b: bool) -> str:
    return "yes" if b else "no"


def _cmd_eval(config: CommandConfig) -> int:
    expr = parse(config.exprs[0])
    report = energy_report(spectrum_of(expr))
    if config.as_json:
        print(json.dumps(report.to_json_obj()))
        return 0
    print(f"expression         {render(expr)}")
    print(f"n                  {report.n}")
    print(f"m                  {report.m}")
    print(f"average degree     {_fmt_rational(report.avg_degree)}")
    print(f"laplacian energy   {_fmt_rational(report.laplacian_energy)}")
    print(f"target 2n-2        {report.target}")
    print(f"L-borderenergetic  {_fmt_bool(report.is_l_borderenergetic)}")
    print(f"complete graph     {_fmt_bool(report.is_complete)}")
    return 0


def _cmd_spectrum(config: CommandConfig) -> int:
    s = spectrum_of(parse(config.exprs[0]))
    if config.as_json:
        print(json.dumps(s.to_json_obj()))
        return 0
    print(f"order {s.n}")
    print(f"{'eigenvalue':<28} multiplicity")
    for value, mult in s.entries:
        print(f"{_fmt_rational(value):<28} {mult}")
    return 0


def _cmd_verify_family(config: CommandConfig) -> int:
    ids = FAMILY_IDS if config.family_id == "all" else (config.family_id,)
    all_passed = True
    if not config.as_json:
        print(
            f"{'id':<8} {'r':>4} {'i':>4} {'order':>6} {'match':>6} "
            f"{'le':>20} {'target':>7} {'le_ok':>6} {'noncosp':>8} status"
        )
    for r in range(1, config.r_max + 1):
        for spec in family_specs(r, ids):
            verdict = verify(spec)
            all_passed = all_passed and verdict.passed
            if config.as_json:
                print(json.dumps(verdict.to_json_obj()))
            else:
                i_text = "-" if spec.i is None else str(spec.i)
                print(
                    f"{spec.id:<8} {spec.r:>4} {i_text:>4} {4 * spec.r + 4:>6} "
                    f"{_fmt_bool(verdict.spectra_match):>6} {_fmt_rational(verdict.le):>20} "
                    f"{8 * spec.r + 6:>7} {_fmt_bool(verdict.le_matches_target):>6} "
                    f"{_fmt_bool(verdict.noncospectral_with_complete):>8} "
                    f"{'PASS' if verdict.passed else 'FAIL'}"
                )
    return 0 if all_passed else 1


def _cmd_cospectral(config: CommandConfig) -> int:
    s1 = spectrum_of(parse(config.exprs[0]))
    s2 = spectrum_of(parse(config.exprs[1]))
    same = is_cospectral(s1, s2)
    if config.as_json:
        print(json.dumps({"cospectral": same}))
    else:
        print("cospectral" if same else "not cospectral")
    return 0


def _cmd_scan(config: CommandConfig) -> int:
    def report_error(lineno: int, message: str) -> None:
        print(f"line {lineno}: {message}", file=sys.stderr)

    records = scan_file(config.input_path, tol=config.tol, jobs=config.jobs, on_error=report_error)
    for rec in records:
        print(f"{rec.index:>8} {rec.g6:<24} {rec.n:>4} {rec.numeric_le:>16.9f} {rec.verdict}")
    if config.jsonl_path:
        with open(config.jsonl_path, "w", encoding="ascii") as fh:
            write_jsonl(records, fh)
    if config.csv_path:
        with open(config.csv_path, "w", encoding="ascii", newline="") as fh:
            write_csv(records, fh)
    hits = sum(rec.verdict != "miss" for rec in records)
    certified = sum(rec.verdict == "certified_hit" for rec in records)
    print(f"{len(records)} records scanned: {hits} hits, {certified} certified", file=sys.stderr)
    return 0


_HANDLERS = {
    "eval": _cmd_eval,
    "spectrum": _cmd_spectrum,
    "verify-family": _cmd_verify_family,
    "cospectral": _cmd_cospectral,
    "scan": _cmd_scan,
}


def run(config: CommandConfig) -> int:
    """Execute one validated invocation; returns the exit status."""
    handler = _HANDLERS[config.subcommand]
    try:
        return handler(config)
    except (ParseError, Graph6Error, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: list[str] | None = None) -> int:
    return run(config_from_argv(argv))
