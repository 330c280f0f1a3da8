"""Numeric zeros of A_n^g and the stability / radius / axis scans built on them.

Roots come from Aberth-Ehrlich iteration in mpmath, seeded with numpy
companion-matrix eigenvalues of the max-normalized polynomial. Verdicts
drawn from floating point are advisory (``consistent`` or
``violation_candidate``); integer evaluations are exact.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from .arithfn import SIGMA, ArithFn
from .gfp import modp_nonvanishing_certificate
from .polycore import IntPoly, darcais_sequence, eval_gaussian, eval_int
from .report import Report, stamp

RADIUS_CONSTANT = 9.7226
RADIUS_LOWER = 9.72245
DEFAULT_TOL = 1e-8
RESIDUAL_REL = 1e-10
ROUTH_MAX_N = 12


@dataclass
class RootSet:
    n: int
    roots: list[complex]
    residuals: list[float] = field(default_factory=list)
    converged: bool = True

    def __len__(self):
        return len(self.roots)

    def to_jsonable(self):
        return {
            "n": self.n,
            "roots": [[r.real, r.imag] for r in self.roots],
            "converged": self.converged,
        }


def _initial_guesses(coeffs: list[int]) -> list[complex]:
    scale = max(abs(c) for c in coeffs)
    desc = np.array([float(Fraction(c, scale)) for c in reversed(coeffs)])
    guesses = np.roots(desc)
    # Aberth needs distinct starting points.
    out = []
    for k, z in enumerate(guesses):
        z = complex(z)
        while any(abs(z - w) < 1e-6 * (1 + abs(w)) for w in out):
            z += complex(1e-3, 1e-3 * (k + 1))
        out.append(z)
    return out


def _aberth(coeffs: list[int], zs: list, dps: int, max_iter: int) -> tuple[list, bool]:
    deg = len(coeffs) - 1
    with mpmath.workdps(dps):
        c = [mpmath.mpf(v) for v in reversed(coeffs)]
        dc = [(deg - k) * c[k] for k in range(deg)]
        zs = [mpmath.mpc(z) for z in zs]
        eps = mpmath.mpf(10) ** (-(dps // 2))
        for _ in range(max_iter):
            biggest = mpmath.mpf(0)
            new = []
            for k, z in enumerate(zs):
                pz = mpmath.polyval(c, z)
                if pz == 0:
                    new.append(z)
                    continue
                dz = mpmath.polyval(dc, z)
                s = mpmath.fsum(1 / (z - w) for j, w in enumerate(zs) if j != k)
                ratio = pz / dz if dz != 0 else mpmath.mpc(eps, eps)
                step = ratio / (1 - ratio * s)
                new.append(z - step)
                biggest = max(biggest, abs(step) / (1 + abs(z)))
            zs = new
            if biggest < eps:
                return zs, True
        return zs, False


def _newton_polish(coeffs: list[int], guesses: list[complex], dps: int) -> tuple[list, bool]:
    deg = len(coeffs) - 1
    ok = True
    out = []
    with mpmath.workdps(dps):
        c = [mpmath.mpf(v) for v in reversed(coeffs)]
        dc = [(deg - k) * c[k] for k in range(deg)]
        eps = mpmath.mpf(10) ** (-(dps // 2))
        for z0 in guesses:
            z = mpmath.mpc(z0)
            for _ in range(60):
                dz = mpmath.polyval(dc, z)
                if dz == 0:
                    ok = False
                    break
                step = mpmath.polyval(c, z) / dz
                z -= step
                if abs(step) <= eps * (1 + abs(z)):
                    break
            else:
                ok = False
            out.append(z)
        if ok:
            # Two guesses drawn to the same root means Newton lost one.
            for i in range(len(out)):
                for j in range(i + 1, len(out)):
                    if abs(out[i] - out[j]) <= eps * 1e6 * (1 + abs(out[i])):
                        ok = False
    return out, ok


def _residual(coeffs: list[int], r: complex) -> tuple[float, float]:
    """(|p(r)|, sum|c| * max(1, |r|)^deg), evaluated at high precision."""
    deg = len(coeffs) - 1
    with mpmath.workdps(60):
        val = abs(mpmath.polyval([mpmath.mpf(v) for v in reversed(coeffs)], mpmath.mpc(r)))
        scale = sum(abs(v) for v in coeffs) * max(1.0, abs(r)) ** deg
        return float(val), float(scale)


def complex_roots(a: IntPoly, dps: int = 50, max_iter: int = 200, n: int | None = None) -> RootSet:
    """All complex roots of a with multiplicity; exact zeros at 0 are split off first."""
    if a.degree < 1:
        raise ValueError("need degree >= 1")
    coeffs = list(a.coeffs)
    zeros = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        zeros += 1
    roots: list[complex] = [0j] * zeros
    converged = True
    if len(coeffs) > 1:
        guesses = _initial_guesses(coeffs)
        found, converged = _newton_polish(coeffs, guesses, dps)
        if not converged:
            found, converged = _aberth(coeffs, guesses, dps, max_iter)
        roots += [complex(z) for z in found]
    residuals = []
    for r in roots:
        val, scale = _residual(list(a.coeffs), r)
        residuals.append(val / scale if scale else 0.0)
        if val > RESIDUAL_REL * scale:
            converged = False
    roots.sort(key=lambda z: (round(z.real, 9), round(z.imag, 9)))
    return RootSet(a.degree if n is None else n, roots, residuals, converged)


def routh_first_column(a: IntPoly) -> list[Fraction] | None:
    """First column of the Routh array, or None if a zero pivot occurs."""
    desc = [Fraction(c) for c in reversed(a.coeffs)]
    rows = [desc[0::2], desc[1::2]]
    width = len(rows[0])
    rows = [r + [Fraction(0)] * (width - len(r)) for r in rows]
    while len(rows) < len(desc):
        top, bot = rows[-2], rows[-1]
        if bot[0] == 0:
            return None
        new = [(bot[0] * top[j + 1] - top[0] * bot[j + 1]) / bot[0] for j in range(width - 1)]
        rows.append(new + [Fraction(0)])
    return [r[0] for r in rows]


def routh_hurwitz_stable(a: IntPoly) -> bool:
    """Exact test that every root of a has negative real part."""
    if a.degree < 1:
        return True
    col = routh_first_column(a)
    if col is None:
        return False
    sign = col[0] > 0
    return all((c > 0) == sign and c != 0 for c in col)


def _hurwitz_check(rs: RootSet, tol: float) -> list[dict]:
    issues = []
    for r in rs.roots:
        if r.real >= -tol:
            issues.append({"kind": "real_part", "root": [r.real, r.imag]})
    for i in range(len(rs.roots)):
        for j in range(i + 1, len(rs.roots)):
            if abs(rs.roots[i] - rs.roots[j]) <= tol:
                issues.append({"kind": "separation", "roots": [i, j]})
    return issues


def hurwitz_report(g: ArithFn, n_lo: int, n_hi: int, tol: float = DEFAULT_TOL) -> Report:
    """Are the zeros of A_n^g(x)/x simple and in the open left half-plane?"""
    t0 = time.perf_counter()
    if not 1 <= n_lo <= n_hi:
        raise ValueError("need 1 <= n_lo <= n_hi")
    seq = darcais_sequence(g, n_hi)
    witnesses = []
    indeterminate = []
    routh = {}
    for n in range(n_lo, n_hi + 1):
        reduced = seq[n].shift_down()
        if n <= ROUTH_MAX_N:
            routh[n] = routh_hurwitz_stable(reduced)
        if reduced.degree < 1:
            continue
        rs = complex_roots(reduced, n=n)
        issues = _hurwitz_check(rs, tol)
        if issues:
            rs = complex_roots(reduced, dps=120, max_iter=1000, n=n)
            issues = _hurwitz_check(rs, tol)
        if not rs.converged:
            indeterminate.append(n)
        if issues:
            witnesses.append({"n": n, "issues": issues})
        if n in routh and routh[n] != (not any(i["kind"] == "real_part" for i in issues)):
            witnesses.append({"n": n, "kind": "routh_disagrees", "routh_stable": routh[n]})
    if witnesses:
        status = "violation_candidate"
    elif indeterminate:
        status = "indeterminate"
    else:
        status = "consistent"
    params = {
        "g": g,
        "n_lo": n_lo,
        "n_hi": n_hi,
        "tol": tol,
        "routh_hurwitz_exact": routh,
        "indeterminate": indeterminate,
    }
    return stamp(Report("roots.hurwitz", params, status, witnesses), t0)


def radius_report(g: ArithFn, n_lo: int, n_hi: int) -> Report:
    """max|root| / (n - 1) against the constant 9.7226 (a theorem for g = sigma)."""
    t0 = time.perf_counter()
    n_lo = max(n_lo, 2)
    seq = darcais_sequence(g, n_hi)
    ratios = {}
    witnesses = []
    running = 0.0
    for n in range(n_lo, n_hi + 1):
        rs = complex_roots(seq[n], n=n)
        rmax = max(abs(r) for r in rs.roots)
        ratio = rmax / (n - 1)
        ratios[n] = {"max_abs_root": rmax, "ratio": ratio}
        running = max(running, ratio)
        if ratio > RADIUS_CONSTANT:
            witnesses.append({"n": n, "max_abs_root": rmax, "ratio": ratio})
    if not witnesses:
        status = "consistent"
    else:
        status = "violation_candidate" if g == SIGMA else "inconclusive"
    params = {
        "g": g,
        "n_lo": n_lo,
        "n_hi": n_hi,
        "c": RADIUS_CONSTANT,
        "c_lower": RADIUS_LOWER,
        "running_max_ratio": running,
        "per_n": ratios,
    }
    return stamp(Report("roots.radius", params, status, witnesses), t0)


def kostant_han_scan(n_lo: int, n_hi: int, extra: int = 3) -> Report:
    """Exact values A_n^sigma(-(m^2 - 1)) for m = n..n+extra and A_n^sigma(+-(n^2 - 1)).

    Vanishing at m = n (equivalently at |x| = n^2 - 1) is recorded as a
    boundary case; only vanishing strictly beyond it counts against the claim.
    """
    t0 = time.perf_counter()
    seq = darcais_sequence(SIGMA, n_hi)
    values = []
    boundary = []
    witnesses = []
    for n in range(n_lo, n_hi + 1):
        for m in range(n, n + extra + 1):
            x = -(m * m - 1)
            v = eval_int(seq[n], x)
            values.append({"n": n, "m": m, "x": x, "value": v, "zero": v == 0})
            if v == 0:
                entry = {"n": n, "m": m, "x": x, "kind": "degenerate" if m == 1 else "boundary"}
                if m == n:
                    boundary.append(entry)
                else:
                    witnesses.append(entry)
        # The negative side x = -(n^2 - 1) is the m = n entry above.
        edge = n * n - 1
        if edge and eval_int(seq[n], edge) == 0:
            boundary.append({"n": n, "x": edge, "kind": "han_boundary"})
    params = {"n_lo": n_lo, "n_hi": n_hi, "values": values, "boundary_vanishing": boundary}
    status = "falsified" if witnesses else "verified"
    return stamp(Report("values.kostant-han", params, status, witnesses), t0)


def imaginary_axis_scan(g: ArithFn, t_values, N: int) -> Report:
    """Exact A_n^g(i t) for 1 <= n <= N and each nonzero integer t."""
    t0 = time.perf_counter()
    t_values = list(t_values)
    if any(t == 0 for t in t_values):
        raise ValueError("t values must be nonzero")
    seq = darcais_sequence(g, N)
    cert3i = None
    coverage = {}
    for t in t_values:
        reasons = []
        if abs(t) == 1 and g.satisfies_mod3_gate():
            reasons.append("roots of unity, m = 4")
        if t % 3 != 0 and g.satisfies_mod3_gate():
            reasons.append("shift by 3*O_K with m = 4, p = 3")
        if abs(t) == 3:
            if cert3i is None:
                cert3i = modp_nonvanishing_certificate(IntPoly([9, 0, 1]), g, 7)
            if cert3i.status == "certified":
                reasons.append("mod-7 certificate for x^2 + 9")
        coverage[t] = reasons
    witnesses = []
    zero_tables = {}
    for t in t_values:
        zeros = [n for n in range(1, N + 1) if eval_gaussian(seq[n], 0, t) == (0, 0)]
        zero_tables[t] = zeros
        for n in zeros:
            witnesses.append({"t": t, "n": n, "covered": bool(coverage[t])})
    if any(w["covered"] for w in witnesses):
        status = "falsified"
    elif witnesses:
        status = "violation_candidate"
    else:
        status = "verified"
    params = {"g": g, "t_values": t_values, "N": N, "coverage": coverage, "zeros": zero_tables}
    return stamp(Report("nonvanishing.imaginary-axis", params, status, witnesses), t0)


def unit_circle_scan(g: ArithFn, n_lo: int, n_hi: int, tol: float = 1e-6) -> Report:
    """Roots of A_n^g within tol of |z| = 1, other than -1."""
    t0 = time.perf_counter()
    seq = darcais_sequence(g, n_hi)
    witnesses = []
    for n in range(max(n_lo, 1), n_hi + 1):
        for r in complex_roots(seq[n], n=n).roots:
            if abs(abs(r) - 1) < tol and abs(r + 1) > tol:
                witnesses.append({"n": n, "root": [r.real, r.imag]})
    status = "violation_candidate" if witnesses else "consistent"
    return stamp(
        Report("roots.unit-circle", {"g": g, "n_lo": n_lo, "n_hi": n_hi, "tol": tol}, status, witnesses),
        t0,
    )
