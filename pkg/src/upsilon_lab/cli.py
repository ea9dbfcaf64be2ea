"""Command-line surface.

Subcommands: invariants, restore, family, seifert, braid, census, plot.
Every report is JSON on stdout with rationals as exact "p/q" strings.

Exit codes: 0 on success (and all in-scope assertions passing), 1 when an
asserted verification fails, 2 on usage or input validation errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import braids, census, family, restorability, seifert, svgplot
from .errors import UpsilonLabError
from .invariants import gap_function_of, hull_of, knot_invariants, upsilon_of
from .laurent import IntLaurentPoly
from .rationals import parse_rational
from .semigroups import torus_semigroup

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_USAGE = 2


class _UsageError(UpsilonLabError):
    pass


def _add_knot_spec_arguments(parser: argparse.ArgumentParser, designed_family: bool = False) -> None:
    group = parser.add_argument_group("knot specification (give exactly one)")
    group.add_argument("--alexander", metavar="JSON",
                       help='coefficient pairs, e.g. "[[0,1],[1,-1],[2,1]]"')
    group.add_argument("--torus", metavar="P,Q", help="torus knot T(p,q)")
    group.add_argument("--family", metavar="K1|K2", choices=("K1", "K2"),
                       help="twist-family member (needs --n)")
    group.add_argument("--n", type=int, metavar="N", help="twist parameter for --family")
    group.add_argument("--braid", metavar="JSON",
                       help='braid closure, e.g. \'{"strands":4,"word":[2,1,3,2]}\'')
    group.add_argument("--catalog", metavar="NAME",
                       help=f"built-in knot: {', '.join(family.catalog_names())}")
    if designed_family:
        group.add_argument("--designed-family", type=int, metavar="M",
                           help="designed restorable polynomial with parameter m >= 3")


def _resolve_knot_spec(args: argparse.Namespace) -> tuple[str | None, IntLaurentPoly]:
    """Turn the exactly-one spec flag into (name, polynomial)."""
    given = []
    if args.alexander is not None:
        given.append("alexander")
    if args.torus is not None:
        given.append("torus")
    if args.family is not None:
        given.append("family")
    if args.braid is not None:
        given.append("braid")
    if args.catalog is not None:
        given.append("catalog")
    if getattr(args, "designed_family", None) is not None:
        given.append("designed_family")
    if len(given) != 1:
        raise _UsageError(
            f"give exactly one knot specification, got {len(given)}: {', '.join(given) or 'none'}"
        )
    kind = given[0]
    if kind == "alexander":
        try:
            pairs = json.loads(args.alexander)
            delta = IntLaurentPoly.from_pairs(pairs)
        except (ValueError, TypeError) as exc:
            raise _UsageError(f"bad --alexander value: {exc}") from exc
        name = None
    elif kind == "torus":
        try:
            p, q = (int(x) for x in args.torus.split(","))
        except ValueError as exc:
            raise _UsageError(f"bad --torus value {args.torus!r}, expected P,Q") from exc
        delta = torus_semigroup(p, q).to_alexander()
        name = f"T({p},{q})"
    elif kind == "family":
        if args.n is None:
            raise _UsageError("--family needs --n")
        delta = family.alexander_closed_form(family.FamilyKnot(args.family, args.n))
        name = f"{args.family}({args.n})"
    elif kind == "braid":
        try:
            word = braids.BraidWord.from_json(json.loads(args.braid))
        except (ValueError, TypeError, KeyError) as exc:
            raise _UsageError(f"bad --braid value: {exc}") from exc
        delta = word.alexander_of_closure()
        name = None
    elif kind == "catalog":
        delta = family.catalog_knot(args.catalog).alexander
        name = args.catalog
    else:  # designed_family
        delta = restorability.designed_family_alexander(args.designed_family)
        name = f"designed_family({args.designed_family})"
    if not delta.is_lspace_form():
        raise _UsageError(
            f"polynomial {delta} is not in L-space form; the pipeline does not apply"
        )
    return name, delta


def _parse_n_range(text: str) -> list[int]:
    """Accept "3", "1..5", or "1,2,4"."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise _UsageError(f"bad n range {text!r}: use N, A..B, or a comma list") from exc
    if not values or any(v < 1 for v in values):
        raise _UsageError(f"n values must be >= 1, got {text!r}")
    return values


def _emit(data: dict) -> None:
    json.dump(data, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _thread_count(args: argparse.Namespace) -> int:
    if getattr(args, "threads", None):
        return max(1, args.threads)
    env = os.environ.get("UPSILON_LAB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise _UsageError(f"bad UPSILON_LAB_THREADS value {env!r}") from None
    return 1


def _cmd_invariants(args: argparse.Namespace) -> int:
    name, delta = _resolve_knot_spec(args)
    _emit(knot_invariants(delta, name=name))
    return EXIT_OK


def _cmd_restore(args: argparse.Namespace) -> int:
    name, delta = _resolve_knot_spec(args)
    report = restorability.enumerate_gap_functions(
        hull_of(delta),
        symmetric_only=not args.all,
        max_solutions=args.max_solutions,
        step_budget=int(args.budget),
        threads=_thread_count(args),
    )
    out = report.to_json()
    if name:
        out = {"name": name, **out}
    _emit(out)
    return EXIT_OK


def _cmd_family_verify(args: argparse.Namespace) -> int:
    results = [family.verify_family_pair(n, burau=args.burau) for n in _parse_n_range(args.n)]
    if args.which in ("K1", "K2"):

        def keep(key: str) -> bool:
            return args.which in key or key == "alexander_distinct"

        results = [
            family.FamilyVerification(
                r.n, {k: c for k, c in r.checks.items() if keep(k)}
            )
            for r in results
        ]
    ok = all(r.ok for r in results)
    if args.format == "json":
        _emit({"ok": ok, "results": [r.to_json() for r in results]})
    else:
        for r in results:
            for key, check in r.checks.items():
                mark = "PASS" if check.ok else "FAIL"
                print(f"{mark} n={r.n} {key}: {check.detail}")
        print(f"{'PASS' if ok else 'FAIL'} overall")
    return EXIT_OK if ok else EXIT_ASSERTION


def _cmd_seifert(args: argparse.Namespace) -> int:
    try:
        ratios = tuple(parse_rational(part) for part in args.r.split(","))
    except ValueError as exc:
        raise _UsageError(f"bad --r value {args.r!r}: {exc}") from exc
    if len(ratios) != 3:
        raise _UsageError("--r needs exactly three comma-separated rationals")
    form = seifert.SeifertForm(args.e0, ratios)
    verdict = seifert.decide(form)
    _emit({"input": form.to_json(), **verdict.to_json()})
    return EXIT_OK


def _cmd_braid(args: argparse.Namespace) -> int:
    if args.named is not None:
        word = braids.named_braid(args.named, args.n)
    elif args.json is not None:
        try:
            word = braids.BraidWord.from_json(json.loads(args.json))
        except (ValueError, TypeError, KeyError) as exc:
            raise _UsageError(f"bad --json value: {exc}") from exc
    elif args.strands is not None and args.word is not None:
        try:
            letters = [int(x) for x in args.word.split(",")]
        except ValueError as exc:
            raise _UsageError(f"bad --word value {args.word!r}") from exc
        word = braids.BraidWord(args.strands, letters)
    else:
        raise _UsageError("give --named NAME, --json SPEC, or --strands S --word W")
    delta = word.alexander_of_closure()
    _emit(
        {
            "braid": word.to_json(),
            "exponent_sum": word.exponent_sum(),
            "alexander": delta.to_pairs(),
        }
    )
    return EXIT_OK


def _cmd_census_scan(args: argparse.Namespace) -> int:
    path = census.sample_census_path() if args.path == "sample" else args.path
    records, warnings = census.load_census(path)
    for warning in warnings:
        print(f"warning: {warning}", file=sys.stderr)
    report = census.scan_census(records, threads=_thread_count(args))
    report["warnings"] = warnings
    _emit(report)
    return EXIT_OK


def _cmd_plot(args: argparse.Namespace) -> int:
    _, delta = _resolve_knot_spec(args)
    whats = set(args.what.split(","))
    unknown = whats - {"gapfn", "hull", "upsilon"}
    if unknown:
        raise _UsageError(f"unknown plot kinds: {', '.join(sorted(unknown))}")
    svgplot.write_svg(
        args.out,
        gapfn=gap_function_of(delta) if "gapfn" in whats else None,
        hull=hull_of(delta) if "hull" in whats else None,
        upsilon=upsilon_of(delta) if "upsilon" in whats else None,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="upsilon-lab",
        description="Exact L-space knot invariants: Alexander, semigroup, gap function, Upsilon.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="full invariant report for one knot")
    _add_knot_spec_arguments(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("restore", help="restorability of Alexander from Upsilon")
    _add_knot_spec_arguments(p, designed_family=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--symmetric-only", action="store_true", default=True,
                      help="report only Alexander-symmetric witnesses (default)")
    mode.add_argument("--all", action="store_true",
                      help="report every slope-{0,2} witness profile")
    p.add_argument("--max-solutions", type=int, default=restorability.DEFAULT_MAX_SOLUTIONS)
    p.add_argument("--budget", type=float, default=restorability.DEFAULT_STEP_BUDGET,
                   help="search node budget (scientific notation accepted)")
    p.add_argument("--threads", "-j", type=int, default=None)
    p.set_defaults(func=_cmd_restore)

    p = sub.add_parser("family", help="verify the twist-family claims")
    family_sub = p.add_subparsers(dest="family_command", required=True)
    pv = family_sub.add_parser("verify", help="run all family assertions")
    pv.add_argument("--which", choices=("both", "K1", "K2"), default="both")
    pv.add_argument("--n", default="1..3", help='twist range: "2", "1..5", or "1,3"')
    pv.add_argument("--burau", choices=("auto", "on", "off"), default="auto",
                    help="Burau cross-derivation (auto: only n <= 2)")
    pv.add_argument("--format", choices=("json", "text"), default="json")
    pv.set_defaults(func=_cmd_family_verify)

    p = sub.add_parser("seifert", help="L-space test for small Seifert forms")
    seifert_sub = p.add_subparsers(dest="seifert_command", required=True)
    pd = seifert_sub.add_parser("decide", help="apply the coprime-pair criterion")
    pd.add_argument("--e0", type=int, required=True)
    pd.add_argument("--r", required=True, help='three ratios, e.g. "-3/7,-1/3,-1/5"')
    pd.set_defaults(func=_cmd_seifert)

    p = sub.add_parser("braid", help="Alexander polynomial of a braid closure")
    p.add_argument("--named", metavar="NAME", help="t09847, v2871, K1, K2 (K1/K2 need --n)")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--json", metavar="SPEC", help='{"strands": S, "word": [...]}')
    p.add_argument("--strands", type=int, default=None)
    p.add_argument("--word", metavar="CSV", default=None, help="letters, e.g. 2,1,3,2,-1")
    p.set_defaults(func=_cmd_braid)

    p = sub.add_parser("census", help="scan a census file for duplicates")
    census_sub = p.add_subparsers(dest="census_command", required=True)
    ps = census_sub.add_parser("scan", help="group records by Alexander and Upsilon")
    ps.add_argument("path", help='JSON-lines file, or "sample" for the bundled fixture')
    ps.add_argument("--threads", "-j", type=int, default=None)
    ps.set_defaults(func=_cmd_census_scan)

    p = sub.add_parser("plot", help="emit an SVG figure")
    _add_knot_spec_arguments(p)
    p.add_argument("--what", default="gapfn,hull",
                   help="comma list from gapfn, hull, upsilon")
    p.add_argument("--out", "-o", required=True, metavar="PATH")
    p.set_defaults(func=_cmd_plot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UpsilonLabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
