"""Command-line interface.

Degree vectors are conormal degrees given as comma-separated integers,
e.g. ``--a -1,3``; the split normal bundle is then ``O(1) + O(-3)``.

Exit codes: 0 pass, 1 mathematical failure, 2 usage or hypothesis error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from exckit.admissibility import (
    FILTERS,
    SYSTEMS,
    InequalityReport,
    check_filtration,
    check_split,
    enumerate_admissible,
    theorem_sum,
)
from exckit.charpoly import leading_coeff_I, leading_coeff_J
from exckit.combinatorics import IdentityViolation
from exckit.graded import Geometry
from exckit.lattice import DoublingPattern
from exckit.singularity import MAX_RMAX, HypothesisError, hilbert_profile
from exckit.verify import SUITES, VerifyOptions, run_suites

SCHEMA = "exckit.v1"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_CONVENTION = (
    "Degree vectors are conormal degrees a_i (comma-separated integers); "
    "the split normal bundle is the sum of O(-a_i)."
)


class UsageError(Exception):
    pass


def parse_vector(text: str) -> tuple[int, ...]:
    try:
        vec = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer vector: {text!r}") from None
    return vec


def rational(x: Fraction) -> dict[str, str]:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _pattern_json(pattern: DoublingPattern) -> dict:
    if pattern.mode == "prefix":
        return {"mode": "prefix", "h": pattern.h}
    return {"mode": "subset", "indices": sorted(pattern.indices)}


def report_json(report: InequalityReport) -> dict:
    g = report.geometry
    return {
        "schema": SCHEMA,
        "command": "check",
        "system": report.system,
        "n": g.n,
        "p": g.p,
        "a": [str(x) for x in g.a],
        "records": [
            {"pattern": _pattern_json(rec.pattern), "value": str(rec.value), "pass": rec.passed}
            for rec in report.records
        ],
        "overall": report.overall,
    }


def report_human(report: InequalityReport) -> str:
    g = report.geometry
    lines = [f"{report.system} check  n={g.n} p={g.p} a={','.join(map(str, g.a))}"]
    for rec in report.records:
        verdict = "pass" if rec.passed else "FAIL"
        lines.append(f"  {rec.pattern.mode:<6} {rec.pattern.label():<14} value={rec.value:<12} {verdict}")
    lines.append("overall: " + ("pass" if report.overall else "FAIL"))
    return "\n".join(lines)


def _geometry(args) -> Geometry:
    if args.a is None:
        raise UsageError("--a is required")
    if args.codim is not None and args.codim != len(args.a):
        raise UsageError(f"--codim {args.codim} does not match length of --a ({len(args.a)})")
    try:
        return Geometry.from_degrees(args.p, args.a)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    try:
        Path(out).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from None


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2)


def cmd_check(args) -> int:
    g = _geometry(args)
    report = check_split(g) if args.system == "split" else check_filtration(g)
    text = _dump(report_json(report)) if args.format == "json" else report_human(report)
    _emit(text, args.out)
    return EXIT_OK if report.overall else EXIT_FAIL


def cmd_enumerate(args) -> int:
    try:
        catalog = enumerate_admissible(args.p, args.codim, args.bound, args.system, args.filter or ())
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "command": "enumerate",
            "p": catalog.p,
            "codim": catalog.codim,
            "bound": catalog.bound,
            "system": catalog.system,
            "filters": list(catalog.filters),
            "label": "admissible",
            "examined": str(catalog.examined),
            "count": str(catalog.count),
            "vectors": [[str(x) for x in vec] for vec in catalog.vectors],
        }
        text = _dump(payload)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([f"a{i}" for i in range(1, catalog.codim + 1)])
        writer.writerows(catalog.vectors)
        text = buf.getvalue()
    _emit(text, args.out)
    return EXIT_OK


def cmd_hilbert(args) -> int:
    if args.a is None:
        raise UsageError("--a is required")
    prof = hilbert_profile(args.a, args.p, args.rmax)
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "command": "hilbert",
            "p": prof.p,
            "a": [str(x) for x in prof.a],
            "values": [str(v) for v in prof.values],
            "embedding_dimension": str(prof.embedding_dimension),
            "rational": prof.rational,
        }
        text = _dump(payload)
    else:
        text = "\n".join([
            f"hilbert  p={prof.p} a={','.join(map(str, prof.a))}",
            "  h(0..{}): {}".format(len(prof.values) - 1, ",".join(map(str, prof.values))),
            f"  embedding dimension: {prof.embedding_dimension}",
            "  rational: " + ("yes" if prof.rational else "not established"),
        ])
    _emit(text, args.out)
    return EXIT_OK


def cmd_leading_coeff(args) -> int:
    g = _geometry(args)
    if args.h is not None and not 1 <= args.h <= g.codim - 1:
        raise UsageError(f"--h must lie in [1, {g.codim - 1}]")
    nfact = math.factorial(g.n)
    lc = leading_coeff_I(g)
    base = theorem_sum(g.a, DoublingPattern.prefix(0), g.p)
    ok = lc * nfact == base
    rows = []
    for h in ([args.h] if args.h is not None else range(1, g.codim)):
        lcj = leading_coeff_J(g, h)
        s = theorem_sum(g.a, DoublingPattern.prefix(h), g.p)
        rows.append((h, lcj, s, lcj / s if s else None))
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "command": "leading-coeff",
            "n": g.n,
            "p": g.p,
            "a": [str(x) for x in g.a],
            "leading_coeff_I": rational(lc),
            "sum_T": str(base),
            "n_factorial": str(nfact),
            "identity_holds": ok,
            "J": [
                {
                    "h": h,
                    "leading_coeff": rational(lcj),
                    "sum_T_doubled": str(s),
                    "ratio": rational(ratio) if ratio is not None else None,
                }
                for h, lcj, s, ratio in rows
            ],
        }
        text = _dump(payload)
    else:
        lines = [
            f"leading coefficients  n={g.n} p={g.p} a={','.join(map(str, g.a))}",
            f"  I: {lc}   n!*lc = {lc * nfact}   sum_T a^t = {base}   "
            + ("ok" if ok else "MISMATCH"),
        ]
        for h, lcj, s, ratio in rows:
            lines.append(f"  J h={h}: {lcj}   sum_T a'^t = {s}   ratio = {ratio if ratio is not None else '-'}")
        text = "\n".join(lines)
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    opts = VerifyOptions(
        kmax=args.kmax, imax=args.imax, jmax=args.jmax, rmax=args.rmax,
        bound=args.bound, samples=args.samples, seed=args.seed,
    )
    try:
        results = run_suites(args.suite or ["all"], opts)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ok = all(r.ok for r in results)
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "command": "verify",
            "suites": [
                {"name": r.name, "checked": str(r.checked), "failures": r.failures} for r in results
            ],
            "overall": ok,
        }
        text = _dump(payload)
    else:
        lines = []
        for r in results:
            lines.append(f"{r.name:<20} checked={r.checked:<6} " + ("pass" if r.ok else "FAIL"))
            lines.extend(f"  counterexample: {f}" for f in r.failures[:10])
        lines.append(f"overall: {'pass' if ok else 'FAIL'} ({len(results)} suites)")
        text = "\n".join(lines)
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exckit",
        description="Exact invariants of exceptional sets. " + _CONVENTION,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, *, out_help="write output to PATH instead of stdout"):
        sp.add_argument("--format", choices=("human", "json"), default="human")
        sp.add_argument("--out", metavar="PATH", help=out_help)

    def geometry_args(sp):
        sp.add_argument("--p", type=int, required=True, help="dimension of the exceptional set")
        sp.add_argument("--a", type=parse_vector, help="conormal degrees, e.g. 5,1")
        sp.add_argument("--codim", type=int, help="n-p; must match the length of --a")

    sp = sub.add_parser("check", help="evaluate the inequality system", description=_CONVENTION)
    geometry_args(sp)
    sp.add_argument("--system", choices=SYSTEMS, default="filtration")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("enumerate", help="list admissible degree vectors in a box",
                        description=_CONVENTION + " human format writes CSV.")
    sp.add_argument("--p", type=int, default=1)
    sp.add_argument("--codim", type=int, default=2)
    sp.add_argument("--bound", type=int, default=3)
    sp.add_argument("--system", choices=SYSTEMS, default="split")
    sp.add_argument("--filter", action="append", choices=FILTERS)
    common(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("hilbert", help="Hilbert function and embedding dimension",
                        description=_CONVENTION + " Requires all a_i >= 0.")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--a", type=parse_vector)
    sp.add_argument("--rmax", type=int, default=3, help=f"last r to report (<= {MAX_RMAX})")
    common(sp)
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("leading-coeff", help="leading coefficients of the partial-sum polynomials",
                        description=_CONVENTION)
    geometry_args(sp)
    sp.add_argument("--h", type=int, help="single doubling prefix (default: all)")
    common(sp)
    sp.set_defaults(func=cmd_leading_coeff)

    sp = sub.add_parser("verify", help="run identity suites")
    sp.add_argument("--suite", action="append",
                    help="suite name (repeatable): all, none, " + ", ".join(SUITES))
    for name in ("kmax", "imax", "jmax", "rmax", "bound"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--samples", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    common(sp)
    sp.set_defaults(func=cmd_verify)
    return parser


_VALUE_FLAGS = {"--a"}


def _normalize(argv: Sequence[str]) -> list[str]:
    # argparse would read "--a -1,3" as two options; glue the value on
    out, it = [], iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_normalize(sys.argv[1:] if argv is None else argv))
    try:
        return args.func(args)
    except HypothesisError as exc:
        print(f"exckit: hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"exckit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IdentityViolation as exc:
        print(f"exckit: identity failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"exckit: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
