"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse/input error,
3 link instead of knot, 4 identity violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import diagram as dg
from .braidkit import BraidWord, conway_to_braid, normalize_odd, parse_conway
from .errors import (
    ConventionError,
    ConwayParseError,
    IdentityViolation,
    LinkNotKnotError,
    MalformedPDError,
)
from .invariants import braid_diagram, check_mirror, check_sum, diagram_report, report
from .sweep import SweepSpec, check_catalog_entry, load_catalog, run_sweep

EXIT_FAIL, EXIT_PARSE, EXIT_LINK, EXIT_IDENTITY = 1, 2, 3, 4


def _emit(obj, stream=None):
    print(json.dumps(obj, sort_keys=False), file=stream or sys.stdout)


def _knot_or_unknot(text: str):
    return parse_conway(text) if text.strip() else None


def cmd_invariants(args) -> int:
    trace = [] if args.trace else None
    rep = report(parse_conway(args.conway), trace=trace)
    if trace:
        print("\n".join(trace), file=sys.stderr)
    _emit(rep.to_json())
    return 0


def cmd_verify(args) -> int:
    spec = SweepSpec(max_sum=args.max_sum, max_len=args.max_len, signs=args.signs)
    summary = run_sweep(spec, workers=args.workers)
    if args.json:
        _emit({
            "cases": summary.cases,
            "failures": [{"conway": list(f.conway.entries), "detail": f.detail} for f in summary.failures],
        })
    else:
        print(summary.line())
        if summary.failures:
            first = summary.failures[0]
            print(f"first failure {first.conway}: {first.detail}")
    return 0 if summary.ok else EXIT_FAIL


def cmd_sum(args) -> int:
    verdict = check_sum(_knot_or_unknot(args.a), _knot_or_unknot(args.b), strict=False)
    _emit(verdict.to_json())
    return 0 if verdict.ok else EXIT_IDENTITY


def cmd_mirror(args) -> int:
    verdict = check_mirror(_knot_or_unknot(args.conway), strict=False)
    _emit(verdict.to_json())
    return 0 if verdict.ok else EXIT_IDENTITY


def cmd_catalog(args) -> int:
    bad = 0
    for entry in load_catalog(args.catalog):
        mismatched = check_catalog_entry(entry)
        bad += bool(mismatched)
        status = "ok" if not mismatched else "MISMATCH " + ",".join(mismatched)
        print(f"{entry.name:8s} {str(entry.conway or '[]'):16s} {status}")
    return 0 if not bad else EXIT_FAIL


def cmd_pd(args) -> int:
    path = Path(args.path)
    if args.action == "export":
        if args.braid:
            gens = [int(x) for x in args.braid.split(",") if x.strip()]
            word = BraidWord.from_signed(args.strands, gens)
        else:
            word = conway_to_braid(normalize_odd(parse_conway(args.conway)))
        od = braid_diagram(word)
        path.write_text(dg.format_pd(dg.to_pd(od)))
        print(f"wrote {od.diagram.crossing_count} crossings to {path}")
        return 0
    try:
        text = path.read_text()
    except OSError as exc:
        raise MalformedPDError(str(exc)) from None
    od = dg.from_pd(dg.parse_pd(text))
    rep = diagram_report(od)
    if args.json:
        _emit(rep.to_json())
    else:
        print(f"crossings {rep.crossings}  w {rep.w}  mu_I {rep.mu_I}  mu_II {rep.mu_II}")
        print(f"sign(G) {rep.sign_G}  |det G| {rep.det}  sigma {rep.sigma}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twobridge", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--trace", action="store_true", help="print automaton steps to stderr")
    parser.add_argument("--catalog", default=None, help="catalog JSON (default: bundled)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="full invariant report for a Conway notation")
    p.add_argument("conway")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="exhaustive identity sweep")
    p.add_argument("--max-sum", type=int, required=True)
    p.add_argument("--max-len", type=int, default=5)
    p.add_argument("--signs", choices=["positive", "negative", "both"], default="both")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sum", help="connected-sum additivity check")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("mirror", help="mirror antisymmetry check")
    p.add_argument("conway")
    p.set_defaults(func=cmd_mirror)

    p = sub.add_parser("catalog", help="check bundled or given catalog entries")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("pd", help="PD-code export/import")
    p.add_argument("action", choices=["export", "import"])
    p.add_argument("path")
    p.add_argument("--conway", default="3")
    p.add_argument("--braid", default=None, help="signed generators, e.g. 2,2,2")
    p.add_argument("--strands", type=int, default=4)
    p.set_defaults(func=cmd_pd)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    # argparse only accepts global flags before the subcommand; allow them anywhere
    argv = list(sys.argv[1:] if argv is None else argv)
    hoisted = [a for a in argv if a in ("--json", "--trace")]
    rest = [a for a in argv if a not in ("--json", "--trace")]
    try:
        args = parser.parse_args(hoisted + rest)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ConwayParseError, MalformedPDError, ValueError) as exc:
        _emit({"error": "parse", "message": str(exc)})
        return EXIT_PARSE
    except LinkNotKnotError as exc:
        _emit({"error": "link-not-knot", "components": exc.components, "message": str(exc)})
        return EXIT_LINK
    except (IdentityViolation, ConventionError) as exc:
        _emit({"error": "identity-violation", "message": str(exc)})
        return EXIT_IDENTITY


if __name__ == "__main__":
    sys.exit(main())
