"""Command line front end.

    wzmahler list
    wzmahler verify <id> [--bits N] [--tol T] [--format json|text]
    wzmahler all [--filter S] [--jobs N] [--bits N] [--format json|text]

Exit codes: 0 all pass, 1 at least one non-conjectural failure,
2 usage error or unknown id.
"""

from __future__ import annotations

import argparse
import sys

from mpmath import mpf

from .context import PrecisionCtx
from .registry import (CheckReport, lookup, registry_entries, reports_to_json,
                       run_all, run_check)


def _add_common(parser, suppress: bool):
    # flags are accepted both before and after the subcommand; the subparser
    # copies use SUPPRESS defaults so they only override when actually given
    d = (lambda _v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--bits", type=int, default=d(256),
                        help="working mantissa precision (default 256)")
    parser.add_argument("--tol", type=str, default=d(None),
                        help="override the per-entry tolerance")
    parser.add_argument("--max-terms", type=int, default=d(500_000),
                        help="series term budget")
    parser.add_argument("--jobs", type=int, default=d(1),
                        help="parallel worker processes for 'all'")
    parser.add_argument("--format", choices=("text", "json"), default=d("text"))
    parser.add_argument("--quiet", action="store_true",
                        default=d(False),
                        help="suppress per-entry notes in text output")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wzmahler",
        description="verify WZ certificates and Mahler-measure/dilogarithm identities")
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)
    p_verify = sub.add_parser("verify", help="run a single identity check")
    p_verify.add_argument("id")
    _add_common(p_verify, suppress=True)
    p_all = sub.add_parser("all", help="run every matching identity check")
    p_all.add_argument("--filter", default=None,
                       help="substring filter on identity ids")
    _add_common(p_all, suppress=True)
    p_list = sub.add_parser("list", help="list registry entries")
    _add_common(p_list, suppress=True)
    return parser


def _print_text(reports: list[CheckReport], quiet: bool):
    width = max((len(r.id) for r in reports), default=10) + 2
    for rep in reports:
        line = f"{rep.status:<17} {rep.id:<{width}}"
        if rep.abs_diff:
            line += f" |diff| = {rep.abs_diff}"
        line += f"  [{rep.elapsed_ms} ms, {rep.terms_used} terms]"
        print(line)
        if rep.notes and not quiet:
            print(f"{'':<18}{rep.notes}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    if args.command == "list":
        for rec in registry_entries():
            flag = " (conjectural)" if rec.kind == "conjectural-numeric" else ""
            flag += " (exit-exempt)" if rec.exit_exempt else ""
            print(f"{rec.id:<22} {rec.kind:<20} {rec.description}{flag}")
        return 0

    tol = mpf(args.tol) if args.tol else None
    ctx = PrecisionCtx(bits=args.bits, max_terms=args.max_terms,
                       target_tol=tol)

    if args.command == "verify":
        rec = lookup(args.id)
        if rec is None:
            print(f"unknown identity id: {args.id}", file=sys.stderr)
            return 2
        reports = [run_check(args.id, ctx, tol_override=tol)]
        code = 0
        rep = reports[0]
        if rep.status in ("FAIL", "ERROR") and not rec.exit_exempt \
                and rec.kind != "conjectural-numeric":
            code = 1
    else:
        reports, code = run_all(filter=args.filter, jobs=args.jobs, ctx=ctx)

    if args.format == "json":
        print(reports_to_json(reports))
    else:
        _print_text(reports, args.quiet)
    return code


if __name__ == "__main__":
    sys.exit(main())
