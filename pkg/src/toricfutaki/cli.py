"""Command-line interface.

Subcommands map one-to-one onto library entry points: ``character`` (the
boundary/bulk terms, required ratio, verdict), ``scan`` (a parameter
sweep), ``verify-paper`` (the named verification checks), plus direct
access to polytope data, family data, single integrals, the ruled-surface
cross-check, and the ampleness scan.  All numeric parameters are parsed
as exact rationals; floats are rejected.  Output is plain text by default
and a stable JSON document under ``--json`` (insertion-ordered keys, no
timestamps, seeds recorded), so repeated runs are byte-identical.

Exit codes: 0 success, 1 usage or data error, 2 unsolvable parameters
(the radial hypothesis fails and ``--force`` was not given), 3
verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .ampleness import check_from_m, infeasibility_scan
from .character import (
    build_report,
    kf_ruled_ratio,
    required_ratio,
    two_parameter_ratio,
)
from .exactnum import LogLinear, RadialSum, format_rational, parse_rational
from .exprparse import PolyParseError, parse_poly
from .family import UnsolvableClassError, make_spec, solvable, transition_map
from .integrate import (
    facet_sigma,
    integrate_poly,
    integrate_poly_boundary,
    integrate_poly_facet,
    integrate_radial_slab,
    slab_bounds,
    volume,
)
from .polytope import DelzantPolytope, standard_blowup_polytope
from .verify import CHECK_NAMES, run_checks


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility header attached to every JSON document."""

    command: str
    options: dict
    seed: int | None
    version: str

    def to_json_dict(self) -> dict:
        return {
            "command": self.command,
            "options": self.options,
            "seed": self.seed,
            "version": self.version,
        }


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _rat_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pair_arg(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected H,E pair, got {text!r}")
    return _rat_arg(parts[0]), _rat_arg(parts[1])


def _rf(x: Fraction | None) -> str:
    """Rational plus float rendering for text output."""
    if x is None:
        return "undefined"
    return f"{format_rational(x)} ({float(x):.9g})"


# ---------------------------------------------------------------------------
# character


def cmd_character(args: argparse.Namespace) -> int:
    if (args.alpha0 is None) != (args.alpha1 is None):
        raise ValueError("--alpha0 and --alpha1 must be given together")
    if args.kahler is not None or args.bundle is not None:
        if args.kahler is None or args.bundle is None:
            raise ValueError("--kahler and --bundle must be given together")
        if args.a is not None or args.b is not None:
            raise ValueError("give either --a/--b or --kahler/--bundle, not both")
        result = two_parameter_ratio(args.n, args.kahler, args.bundle)
        manifest = RunManifest(
            "character",
            {
                "n": args.n,
                "kahler": [format_rational(v) for v in args.kahler],
                "bundle": [format_rational(v) for v in args.bundle],
            },
            None,
            __version__,
        )
        if args.json:
            _emit_json({"manifest": manifest.to_json_dict(), "two_parameter": result})
        else:
            print(f"n = {args.n}, kahler class {args.kahler[0]}*H - {args.kahler[1]}*E, "
                  f"bundle class {args.bundle[0]}*H - {args.bundle[1]}*E")
            print(f"reduced parameters: a = {result['reduced_a']}, b = {result['reduced_b']}")
            print(f"scale factor s/r^2 = {result['scale']}")
            ratio = result["required_ratio"]
            print(f"required ratio alpha1/alpha0 = {ratio if ratio is not None else 'undefined'}")
            print("note: two-parameter reduction is experimental")
        return 0

    if args.a is None or args.b is None:
        raise ValueError("--a and --b are required")
    spec = make_spec(args.n, args.a, args.b, force=args.force)
    report = build_report(spec, args.alpha0, args.alpha1)
    manifest = RunManifest(
        "character",
        {
            "n": args.n,
            "a": format_rational(spec.a),
            "b": format_rational(spec.b),
            "alpha0": None if args.alpha0 is None else format_rational(args.alpha0),
            "alpha1": None if args.alpha1 is None else format_rational(args.alpha1),
            "force": args.force,
        },
        None,
        __version__,
    )
    if args.json:
        _emit_json({"manifest": manifest.to_json_dict(), "report": report.to_json_dict()})
        return 0
    print(f"n = {report.n}, a = {format_rational(report.a)}, b = {format_rational(report.b)}")
    print(f"profile slopes: A = {_rf(report.A)}, B = {_rf(report.B)}, lambda = {_rf(report.lam)}")
    print(f"solvable: {'yes' if report.solvable else 'NO (formal evaluation under --force)'}")
    print(f"boundary term = {_rf(report.boundary_term)}")
    print(f"bulk term     = {_rf(report.bulk_term)}")
    print(f"required ratio alpha1/alpha0 = {_rf(report.required_ratio)}")
    if report.closed_form_discrepancy:
        print(f"closed-form note: {report.closed_form_discrepancy}")
    if report.character is not None:
        print(
            f"character at (alpha0, alpha1) = "
            f"({format_rational(report.alpha0)}, {format_rational(report.alpha1)}): "
            f"{_rf(report.character)}"
        )
        print(f"verdict: {report.verdict.value}")
    return 0


# ---------------------------------------------------------------------------
# scan


def _rational_range(lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
    if step <= 0:
        raise ValueError(f"step must be positive, got {step}")
    if lo > hi:
        raise ValueError(f"empty range: {lo} > {hi}")
    out = []
    v = lo
    while v <= hi:
        out.append(v)
        v += step
    return out


def cmd_scan(args: argparse.Namespace) -> int:
    a_values = _rational_range(args.a_from, args.a_to, args.step)
    b_values = _rational_range(args.b_from, args.b_to, args.step)
    rows = []
    for a in a_values:
        for b in b_values:
            row: dict = {
                "n": args.n,
                "a": format_rational(a),
                "b": format_rational(b),
            }
            if b <= 1 or a <= 0:
                row.update(
                    solvable=False, boundary_term="", bulk_term="",
                    required_ratio="", verdict="",
                )
                rows.append(row)
                continue
            ok = solvable(args.n, a, b)
            row["solvable"] = ok
            if not ok:
                row.update(boundary_term="", bulk_term="", required_ratio="", verdict="")
                rows.append(row)
                continue
            report = build_report(make_spec(args.n, a, b))
            ratio = report.required_ratio
            if ratio is None:
                verdict = "NoVanishingPossible" if report.boundary_term != 0 else ""
            elif ratio < 0:
                verdict = "ObstructedForPositiveAlpha"
            else:
                verdict = ""
            row.update(
                boundary_term=format_rational(report.boundary_term),
                bulk_term=format_rational(report.bulk_term),
                required_ratio="undefined" if ratio is None else format_rational(ratio),
                verdict=verdict,
            )
            rows.append(row)
    rows.sort(key=lambda r: (Fraction(r["a"]), Fraction(r["b"])))

    fields = ["n", "a", "b", "solvable", "boundary_term", "bulk_term", "required_ratio", "verdict"]
    manifest = RunManifest(
        "scan",
        {
            "n": args.n,
            "a_from": format_rational(args.a_from),
            "a_to": format_rational(args.a_to),
            "b_from": format_rational(args.b_from),
            "b_to": format_rational(args.b_to),
            "step": format_rational(args.step),
        },
        None,
        __version__,
    )
    if args.csv:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
        print(f"wrote {len(rows)} rows to {args.csv}")
        return 0
    if args.json:
        _emit_json({"manifest": manifest.to_json_dict(), "rows": rows})
        return 0
    print("  ".join(fields))
    for row in rows:
        print("  ".join(str(row[f]) for f in fields))
    print(f"{len(rows)} rows")
    return 0


# ---------------------------------------------------------------------------
# verify-paper


def cmd_verify_paper(args: argparse.Namespace) -> int:
    names = None
    if args.only:
        names = [s.strip() for s in args.only.split(",") if s.strip()]
    results = run_checks(names, seed=args.seed)
    manifest = RunManifest(
        "verify-paper",
        {"only": names},
        args.seed,
        __version__,
    )
    passed = sum(1 for r in results if r.passed)
    if args.json:
        _emit_json(
            {
                "manifest": manifest.to_json_dict(),
                "checks": [r.to_json_dict() for r in results],
                "passed": passed,
                "total": len(results),
                "ok": passed == len(results),
            }
        )
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  {r.detail}")
        print(f"RESULT: {passed}/{len(results)} checks passed (seed {args.seed})")
    return 0 if passed == len(results) else 3


# ---------------------------------------------------------------------------
# polytope


def _load_polytope(args: argparse.Namespace) -> DelzantPolytope:
    if (args.standard is None) == (args.file is None):
        raise ValueError("give exactly one of --standard N,B or --file PATH")
    if args.standard is not None:
        parts = args.standard.split(",")
        if len(parts) != 2:
            raise ValueError(f"--standard expects N,B; got {args.standard!r}")
        n = int(parts[0])
        return standard_blowup_polytope(n, parse_rational(parts[1]))
    with open(args.file, "r", encoding="utf-8") as fh:
        return DelzantPolytope.from_json_dict(json.load(fh))


def cmd_polytope(args: argparse.Namespace) -> int:
    P = _load_polytope(args)
    vol = volume(P)
    sigmas = [facet_sigma(P, i) for i in range(P.num_facets)]
    manifest = RunManifest("polytope", {"source": args.standard or args.file}, None, __version__)
    if args.json:
        _emit_json(
            {
                "manifest": manifest.to_json_dict(),
                "polytope": P.to_json_dict(),
                "vertices": [[format_rational(c) for c in v] for v in P.vertices()],
                "volume": format_rational(vol),
                "volume_float": float(vol),
                "facet_sigma": [format_rational(s) for s in sigmas],
                "is_delzant": P.is_delzant(),
            }
        )
        return 0
    print(f"n = {P.n}, facets = {P.num_facets}, vertices = {len(P.vertices())}")
    for i, h in enumerate(P.halfspaces):
        print(f"  facet[{i}]: v = {h.v}, lam = {format_rational(h.lam)}, "
              f"sigma measure = {_rf(sigmas[i])}")
    print("vertices:")
    for v in P.vertices():
        print("  (" + ", ".join(format_rational(c) for c in v) + ")")
    print(f"volume = {_rf(vol)}")
    print(f"delzant: {'yes' if P.is_delzant() else 'no'}")
    return 0


# ---------------------------------------------------------------------------
# family


def cmd_family(args: argparse.Namespace) -> int:
    spec = make_spec(args.n, args.a, args.b, force=args.force)
    source = standard_blowup_polytope(spec.n, spec.b)
    images = [transition_map(spec, v) for v in source.vertices()]
    manifest = RunManifest(
        "family",
        {
            "n": args.n,
            "a": format_rational(spec.a),
            "b": format_rational(spec.b),
            "force": args.force,
        },
        None,
        __version__,
    )
    if args.json:
        _emit_json(
            {
                "manifest": manifest.to_json_dict(),
                "A": format_rational(spec.A),
                "B": format_rational(spec.B),
                "lambda": format_rational(spec.lam),
                "solvable": spec.solvable,
                "integral_class": spec.integral_class,
                "vertex_images": [
                    {
                        "vertex": [format_rational(c) for c in v],
                        "image": [format_rational(c) for c in u],
                    }
                    for v, u in zip(source.vertices(), images)
                ],
            }
        )
        return 0
    print(f"n = {spec.n}, a = {format_rational(spec.a)}, b = {format_rational(spec.b)}")
    print(f"A = {_rf(spec.A)}, B = {_rf(spec.B)}, lambda = {_rf(spec.lam)}")
    print(f"solvable: {'yes' if spec.solvable else 'NO (formal evaluation under --force)'}")
    print("vertex images under the transition map:")
    for v, u in zip(source.vertices(), images):
        vs = ", ".join(format_rational(c) for c in v)
        us = ", ".join(format_rational(c) for c in u)
        print(f"  ({vs}) -> ({us})")
    return 0


# ---------------------------------------------------------------------------
# integrate


def cmd_integrate(args: argparse.Namespace) -> int:
    P = _load_polytope(args)
    poly = parse_poly(args.poly, P.n)
    modes = [args.facet is not None, args.boundary, args.radial_power is not None]
    if sum(modes) > 1:
        raise ValueError("give at most one of --facet, --boundary, --radial-power")

    log_coeff = Fraction(0)
    log_base: Fraction | None = None
    if args.facet is not None:
        value = integrate_poly_facet(P, args.facet, poly)
        domain = f"facet {args.facet}"
    elif args.boundary:
        value = integrate_poly_boundary(P, poly)
        domain = "boundary"
    elif args.radial_power is not None:
        bounds = slab_bounds(P)
        if bounds is None:
            raise ValueError(
                "--radial-power needs a slab polytope {x >= 0, lo <= sum(x) <= hi}"
            )
        lo, hi = bounds
        integrand = RadialSum.from_poly(poly, args.radial_power)
        res = integrate_radial_slab(P.n, lo, hi, integrand)
        value, log_coeff, log_base = res.q0, res.q1, hi / lo
        domain = f"body, integrand multiplied by X^{args.radial_power}"
    else:
        value = integrate_poly(P, poly)
        domain = "body"

    as_float = float(value)
    if log_base is not None:
        as_float = LogLinear(value, log_coeff).to_float(log_base)
    manifest = RunManifest(
        "integrate",
        {
            "source": args.standard or args.file,
            "poly": args.poly,
            "facet": args.facet,
            "boundary": args.boundary,
            "radial_power": args.radial_power,
        },
        None,
        __version__,
    )
    if args.json:
        _emit_json(
            {
                "manifest": manifest.to_json_dict(),
                "domain": domain,
                "exact": format_rational(value),
                "log_coeff": format_rational(log_coeff),
                "log_base": None if log_base is None else format_rational(log_base),
                "float": as_float,
            }
        )
        return 0
    print(f"domain: {domain}")
    if log_coeff != 0:
        print(
            f"exact = {format_rational(value)} + {format_rational(log_coeff)}"
            f"*log({format_rational(log_base)})"
        )
    else:
        print(f"exact = {format_rational(value)}")
    print(f"float = {as_float:.12g}")
    return 0


# ---------------------------------------------------------------------------
# kf-check


def cmd_kf_check(args: argparse.Namespace) -> int:
    ruled = kf_ruled_ratio(args.genus, args.k, args.kprime, args.k1, args.k2)
    cross: dict | None = None
    if args.cross_check:
        if ruled.blowup_class is None:
            raise ValueError(
                "--cross-check needs genus 0 and k = kprime = 1 (the one-point blow-up case)"
            )
        h, e = ruled.blowup_class
        if e <= 0 or h <= e:
            raise ValueError(f"blow-up class {h}*H - {e}*E is not Kahler; no cross-check")
        a = Fraction(h, e)
        spec = make_spec(2, a, 3)
        pipeline = required_ratio(spec)
        scaled = None if pipeline is None else pipeline * Fraction(1, e**2)
        cross = {
            "class": ruled.blowup_class_str,
            "reduced_a": format_rational(a),
            "b": "3",
            "pipeline_ratio": None if scaled is None else format_rational(scaled),
            "match": scaled == ruled.ratio,
        }
    manifest = RunManifest(
        "kf-check",
        {
            "genus": args.genus,
            "k": args.k,
            "kprime": args.kprime,
            "k1": args.k1,
            "k2": args.k2,
        },
        None,
        __version__,
    )
    if args.json:
        payload = {
            "manifest": manifest.to_json_dict(),
            "ratio": format_rational(ruled.ratio),
            "ratio_float": float(ruled.ratio),
            "blowup_class": ruled.blowup_class_str,
            "cross_check": cross,
        }
        _emit_json(payload)
        return 0
    print(
        f"genus {args.genus}, degrees (k, k') = ({args.k}, {args.kprime}), "
        f"polarization (k1, k2) = ({args.k1}, {args.k2})"
    )
    print(f"required ratio = {_rf(ruled.ratio)}")
    if ruled.blowup_class_str:
        print(f"one-point blow-up class: {ruled.blowup_class_str}")
    if cross is not None:
        status = "MATCH" if cross["match"] else "MISMATCH"
        print(f"pipeline cross-check on {cross['class']}: {cross['pipeline_ratio']} [{status}]")
    return 0


# ---------------------------------------------------------------------------
# ample-check


def cmd_ample_check(args: argparse.Namespace) -> int:
    if args.scan:
        result = infeasibility_scan(
            grid_bound=args.grid_bound, random_samples=args.samples, seed=args.seed
        )
        manifest = RunManifest(
            "ample-check",
            {"scan": True, "grid_bound": args.grid_bound, "samples": args.samples},
            args.seed,
            __version__,
        )
        if args.json:
            _emit_json({"manifest": manifest.to_json_dict(), "scan": result.to_json_dict()})
            return 0
        print(
            f"checked {result.checked} pairs (grid |m| <= {result.grid_bound}, "
            f"{result.random_samples} random rational pairs, seed {result.seed})"
        )
        print(f"feasible pairs: {len(result.feasible_pairs)}")
        print(f"marginal (knife-edge) pairs: {len(result.marginal_pairs)}")
        print(f"all infeasible: {'yes' if result.all_infeasible else 'NO'}")
        return 0
    if args.m1 is None or args.m2 is None:
        raise ValueError("give --m1 and --m2, or --scan")
    res = check_from_m(args.m1, args.m2)
    manifest = RunManifest(
        "ample-check",
        {"m1": format_rational(args.m1), "m2": format_rational(args.m2)},
        None,
        __version__,
    )
    if args.json:
        _emit_json({"manifest": manifest.to_json_dict(), "check": res.to_json_dict()})
        return 0
    print(f"(m1, m2) = ({format_rational(args.m1)}, {format_rational(args.m2)})")
    print(f"candidate coefficients: a = {res.a:.12g}, b = {res.b:.12g}")
    for entry in res.to_json_dict()["inequalities"]:
        flag = "holds" if entry["holds"] else "FAILS"
        marginal = " [marginal]" if entry["marginal"] else ""
        print(f"  {entry['name']}: {entry['value']:.6e}  {flag}{marginal}")
    print(f"feasible: {'yes' if res.feasible else 'no'}")
    return 0


# ---------------------------------------------------------------------------
# parser


# Let bare negative rationals like -1/8 pass as option values instead of
# being mistaken for option flags.
_NEGATIVE_VALUE_RE = re.compile(r"^-\d+(/\d+)?$")


def _allow_negative_rationals(parser: argparse.ArgumentParser) -> None:
    parser._negative_number_matcher = _NEGATIVE_VALUE_RE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document")
    common.add_argument(
        "--seed", type=int, default=42, help="seed for stochastic parts (default 42)"
    )

    parser = argparse.ArgumentParser(
        prog="toricfutaki",
        description="Exact obstruction characters on blown-up projective space.",
    )
    _allow_negative_rationals(parser)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "character",
        parents=[common],
        help="boundary/bulk terms, required coupling ratio, verdict",
    )
    p.add_argument("--n", type=int, required=True, help="complex dimension (>= 2)")
    p.add_argument("--a", type=_rat_arg, help="size of the second class (rational)")
    p.add_argument("--b", type=_rat_arg, help="size of the reference class (rational)")
    p.add_argument("--alpha0", type=_rat_arg, help="boundary weight")
    p.add_argument("--alpha1", type=_rat_arg, help="bulk weight")
    p.add_argument(
        "--kahler", type=_pair_arg, metavar="H,E",
        help="general reference class h*H - e*E (experimental; with --bundle)",
    )
    p.add_argument(
        "--bundle", type=_pair_arg, metavar="H,E",
        help="general second class h*H - e*E (experimental; with --kahler)",
    )
    p.add_argument(
        "--force", action="store_true",
        help="evaluate formally even when the radial hypothesis fails",
    )
    _allow_negative_rationals(p)
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("scan", parents=[common], help="sweep (a, b) over a rational grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a-from", type=_rat_arg, required=True)
    p.add_argument("--a-to", type=_rat_arg, required=True)
    p.add_argument("--b-from", type=_rat_arg, required=True)
    p.add_argument("--b-to", type=_rat_arg, required=True)
    p.add_argument("--step", type=_rat_arg, default=Fraction(1))
    p.add_argument("--csv", metavar="PATH", help="write rows as CSV to PATH")
    _allow_negative_rationals(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser(
        "verify-paper",
        parents=[common],
        help="run the named verification checks against the exact pipeline",
    )
    p.add_argument(
        "--only",
        metavar="NAMES",
        help=f"comma-separated subset of: {', '.join(CHECK_NAMES)}",
    )
    _allow_negative_rationals(p)
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("polytope", parents=[common], help="vertices, volume, facet measures")
    p.add_argument("--standard", metavar="N,B", help="model slab polytope of dimension N, size B")
    p.add_argument("--file", metavar="PATH", help="polytope JSON file")
    _allow_negative_rationals(p)
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("family", parents=[common], help="profile slopes and vertex mapping")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=_rat_arg, required=True)
    p.add_argument("--b", type=_rat_arg, required=True)
    p.add_argument("--force", action="store_true")
    _allow_negative_rationals(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("integrate", parents=[common], help="one exact integral")
    p.add_argument("--poly", required=True, help="polynomial in x1..xn, e.g. 'x1^2 - x2/3'")
    p.add_argument("--standard", metavar="N,B")
    p.add_argument("--file", metavar="PATH")
    p.add_argument("--facet", type=int, help="integrate over this facet index")
    p.add_argument("--boundary", action="store_true", help="integrate over the whole boundary")
    p.add_argument(
        "--radial-power", type=int, metavar="K",
        help="multiply the integrand by X^K (slab polytopes only)",
    )
    _allow_negative_rationals(p)
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("kf-check", parents=[common], help="ruled-surface required ratio")
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--kprime", type=int, default=1)
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument(
        "--cross-check", action="store_true",
        help="compare against the exact pipeline on the blow-up class",
    )
    _allow_negative_rationals(p)
    p.set_defaults(func=cmd_kf_check)

    p = sub.add_parser("ample-check", parents=[common], help="ampleness cone inequalities")
    p.add_argument("--m1", type=_rat_arg)
    p.add_argument("--m2", type=_rat_arg)
    p.add_argument("--scan", action="store_true", help="run the infeasibility scan")
    p.add_argument("--grid-bound", type=int, default=50)
    p.add_argument("--samples", type=int, default=10_000)
    _allow_negative_rationals(p)
    p.set_defaults(func=cmd_ample_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; exit code 2 is reserved for
        # unsolvable parameters, so usage problems map to 1.
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except UnsolvableClassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PolyParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, TypeError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
