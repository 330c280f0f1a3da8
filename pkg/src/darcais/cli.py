"""Command-line entry point; every verification writes one JSON report per line."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import cyclo, gfp, hooks, polycore, roots
from .arithfn import parse_spec
from .errors import DarcaisError, HypothesisViolated
from .polycore import IntPoly
from .report import Report, enable_timing
from .suite import run_suite


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _coeff_list(text: str) -> list[int]:
    text = text.strip()
    if text.startswith("["):
        return [int(v) for v in json.loads(text)]
    return [int(v) for v in text.replace(",", " ").split()]


def _n_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    return int(lo), int(hi or lo)


def _int_list(text: str) -> list[int]:
    return [int(v) for v in text.replace(",", " ").split()]


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", type=Path, help="write reports to this file instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default: cores)")
    common.add_argument("--timings", action="store_true", help="record wall-clock timing_ms")

    def gspec(p):
        p.add_argument("--g", type=parse_spec, default=parse_spec("sigma"), metavar="SPEC",
                       help="sigma, power:<d>, table:@file.json or a JSON array")

    parser = _Parser(prog="darcais", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", parents=[common], help="coefficients of A_n^g = n! P_n^g")
    gspec(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all", action="store_true", help="emit A_0 .. A_n")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("factor-modp", parents=[common], help="factor A_n^g over F_p")
    gspec(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("certify", parents=[common], help="mod-p non-vanishing certificate")
    gspec(p)
    p.add_argument("--minpoly", type=_coeff_list, required=True, help="coefficients, lowest first")
    p.add_argument("--p", type=int, required=True)

    verify = sub.add_parser("verify", help="instance verifiers")
    vs = verify.add_subparsers(dest="claim", required=True, parser_class=_Parser)
    p = vs.add_parser("roots-of-unity", parents=[common])
    gspec(p)
    p.add_argument("--N", type=int, default=50)
    p.add_argument("--M", type=int, default=20)
    p.add_argument("--include-m2", action="store_true")
    p = vs.add_parser("shifted", parents=[common])
    gspec(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=int, required=True, help="2, 3, or 6 for the corollary")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--box", type=int, default=5)
    p.add_argument("--N", type=int, default=20)
    p = vs.add_parser("zmija", parents=[common])
    gspec(p)
    p = vs.add_parser("periodicity", parents=[common])
    gspec(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--N", type=int, default=50)
    p = vs.add_parser("falling-factorial", parents=[common])
    gspec(p)
    p.add_argument("--p", type=int, required=True)
    p = vs.add_parser("hooklength", parents=[common])
    p.add_argument("--n", type=int, default=10)
    p = vs.add_parser("pentagonal", parents=[common])
    p.add_argument("--N", type=int, default=50)

    cy = sub.add_parser("cyclo", help="cyclotomic field data")
    cs = cy.add_subparsers(dest="op", required=True, parser_class=_Parser)
    for name in ("inertial", "dk-check"):
        p = cs.add_parser(name, parents=[common])
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--m", type=int, required=True)
    p = cs.add_parser("minpoly", parents=[common])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--alpha", type=_coeff_list, required=True, help="power-basis coordinates")
    p = cs.add_parser("index", parents=[common])
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--alpha", type=_coeff_list, required=True)
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("roots", parents=[common], help="numeric zero scans")
    gspec(p)
    p.add_argument("--n-range", type=_n_range, default=(1, 20), metavar="LO:HI")
    p.add_argument("--check", default="hurwitz,radius",
                   help="comma list of hurwitz, radius, kostant, imaginary, unit-circle")
    p.add_argument("--t", type=_int_list, default=[1, -1, 3, -3])
    p.add_argument("--tol", type=float, default=roots.DEFAULT_TOL)

    p = sub.add_parser("suite", parents=[common], help="run the bundled verification suite")
    gspec(p)
    p.add_argument("--profile", choices=("quick", "full"), default="quick")
    return parser


def _dispatch(args) -> list[Report] | str:
    cmd = args.command
    if cmd == "compute":
        seq = polycore.darcais_sequence(args.g, args.n)
        picked = range(args.n + 1) if args.all else [args.n]
        if args.format == "text":
            return "".join(" ".join(str(c) for c in seq[k].coeffs) + "\n" for k in picked)
        return "".join(
            json.dumps({"n": k, "coeffs": [str(c) for c in seq[k].coeffs]}) + "\n" for k in picked
        )
    if cmd == "factor-modp":
        a = polycore.darcais(args.g, args.n)
        fl = gfp.factor_gfp(gfp.reduce_mod_p(a, args.p), args.seed)
        return [Report("gfp.factor", {"g": args.g, "n": args.n, "p": args.p, "factorization": fl},
                       "verified", seed=args.seed)]
    if cmd == "certify":
        return [gfp.modp_nonvanishing_certificate(IntPoly(args.minpoly), args.g, args.p, args.seed)]
    if cmd == "verify":
        c = args.claim
        if c == "roots-of-unity":
            return [cyclo.verify_roots_of_unity(args.g, args.N, args.M, args.include_m2)]
        if c == "shifted":
            try:
                return [cyclo.verify_shifted_nonvanishing(
                    args.g, args.m, args.p, args.samples, args.seed, args.N, args.box)]
            except HypothesisViolated as exc:
                claim = "nonvanishing.shift6" if args.p == 6 else f"nonvanishing.shift{args.p}"
                return [Report(claim, {"g": args.g, "m": args.m, "mu": args.p, "reason": str(exc)},
                               "hypothesis_violated")]
        if c == "zmija":
            return [gfp.zmija_conditions(args.g, args.seed)]
        if c == "periodicity":
            return [gfp.verify_periodicity(args.g, args.p, args.N)]
        if c == "falling-factorial":
            return [gfp.verify_falling_factorial(args.g, args.p)]
        if c == "hooklength":
            return [hooks.verify_no_identity(args.n)]
        if c == "pentagonal":
            return [polycore.pentagonal_pattern_check(args.N)]
    if cmd == "cyclo":
        if args.op == "inertial":
            data = cyclo.inertial_data(args.p, args.m)
            return [Report("cyclo.inertial", {"p": args.p, "m": args.m, "splitting": data,
                                              "in_R_p": data.f == 1})]
        if args.op == "dk-check":
            return [cyclo.dedekind_kummer_check(args.p, args.m, args.seed)]
        alpha = cyclo.CycloElem(args.m, args.alpha)
        if args.op == "minpoly":
            mp = cyclo.min_poly(alpha)
            return [Report("cyclo.minpoly", {"alpha": alpha, "minpoly": mp.poly,
                                             "primitive": mp.primitive})]
        if args.op == "index":
            return [cyclo.index_coprime_check(alpha, args.p)]
    if cmd == "roots":
        lo, hi = args.n_range
        out = []
        for check in (c.strip() for c in args.check.split(",") if c.strip()):
            if check == "hurwitz":
                out.append(roots.hurwitz_report(args.g, lo, hi, args.tol))
            elif check == "radius":
                out.append(roots.radius_report(args.g, lo, hi))
            elif check == "kostant":
                out.append(roots.kostant_han_scan(lo, hi))
            elif check == "imaginary":
                out.append(roots.imaginary_axis_scan(args.g, args.t, hi))
            elif check == "unit-circle":
                out.append(roots.unit_circle_scan(args.g, lo, hi))
            else:
                raise UsageError(f"unknown check {check!r}")
        return out
    if cmd == "suite":
        members, aggregate = run_suite(args.profile, args.g, args.seed, args.jobs, args.timings)
        return members + [aggregate]
    raise UsageError(f"unhandled command {cmd!r}")


def exit_code(reports: list[Report]) -> int:
    statuses = {r.status for r in reports}
    if statuses & {"falsified", "violation_candidate"}:
        return 1
    if "hypothesis_violated" in statuses:
        return 2
    return 0


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    enable_timing(getattr(args, "timings", False))
    try:
        result = _dispatch(args)
    except (DarcaisError, UsageError, ValueError, OSError) as exc:
        print(f"darcais: error: {exc}", file=sys.stderr)
        return 1
    if isinstance(result, str):
        text, code = result, 0
    else:
        text = "".join(r.to_json() + "\n" for r in result)
        code = exit_code(result)
    if getattr(args, "out", None):
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
