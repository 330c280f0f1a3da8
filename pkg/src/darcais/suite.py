"""The bundled verification suite, in a quick and a full profile."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from . import cyclo, gfp, hooks, polycore, roots
from .arithfn import SIGMA, ArithFn
from .errors import HypothesisViolated
from .polycore import IntPoly
from .report import Report, enable_timing, worst_status

PROFILES = {
    "quick": {
        "oracle_N": 30,
        "partitions_N": 20,
        "patterns_N": 100,
        "lemma_N": 60,
        "roots_N": 30,
        "roots_M": 12,
        "axis_N": 30,
        "dk_M": 20,
        "R_M": 200,
        "shift_N": 10,
        "shift_samples": 5,
        "hook_n": 8,
        "root_hi": 20,
        "pentagonal_N": 60,
    },
    "full": {
        "oracle_N": 60,
        "partitions_N": 30,
        "patterns_N": 200,
        "lemma_N": 150,
        "roots_N": 100,
        "roots_M": 30,
        "axis_N": 100,
        "dk_M": 40,
        "R_M": 200,
        "shift_N": 20,
        "shift_samples": 10,
        "hook_n": 10,
        "root_hi": 40,
        "pentagonal_N": 200,
    },
}

PRIMES = (2, 3, 5, 7, 11, 13)
SHIFT_CASES = ((5, 2), (7, 2), (4, 3), (5, 3), (5, 6))


def _shifted(g, m, mu, samples, seed, N):
    try:
        return cyclo.verify_shifted_nonvanishing(g, m, mu, samples, seed, N)
    except HypothesisViolated as exc:
        claim = "nonvanishing.shift6" if mu == 6 else f"nonvanishing.shift{mu}"
        return Report(claim, {"g": g, "m": m, "mu": mu, "reason": str(exc)}, "hypothesis_violated")


def _lemma_pair(g, p, N):
    return [gfp.verify_periodicity(g, p, N), gfp.verify_falling_factorial(g, p)]


def tasks(profile: str, g: ArithFn, seed: int) -> list[tuple]:
    b = PROFILES[profile]
    out = [
        (polycore.verify_oracle_equivalence, (g, (-3, -1, 0, 1, 2, 5), b["oracle_N"])),
        (hooks.verify_partition_counts, (b["partitions_N"],)),
        (polycore.verify_product_patterns, (b["patterns_N"],)),
        (polycore.pentagonal_pattern_check, (b["pentagonal_N"],)),
        (gfp.verify_linear_splitting, (g, 2, b["lemma_N"])),
        (gfp.verify_linear_splitting, (g, 3, b["lemma_N"])),
        (gfp.verify_a3_sharpness, ()),
        (gfp.zmija_conditions, (g, seed)),
        (gfp.modp_nonvanishing_certificate, (IntPoly([1, 0, 1]), g, 3, seed)),
        (gfp.modp_nonvanishing_certificate, (IntPoly([9, 0, 1]), g, 7, seed)),
        (cyclo.verify_roots_of_unity, (g, b["roots_N"], b["roots_M"])),
        (cyclo.dedekind_kummer_range, ((2, 3, 5, 7), b["dk_M"], seed)),
        (cyclo.verify_R_closed_forms, (b["R_M"],)),
        (roots.imaginary_axis_scan, (g, (1, -1, 3, -3), b["axis_N"])),
        (hooks.verify_no_identity, (b["hook_n"],)),
        (roots.radius_report, (g, 2, b["root_hi"])),
        (roots.hurwitz_report, (g, 1, b["root_hi"])),
        (roots.kostant_han_scan, (1, 10)),
    ]
    for p in PRIMES:
        out.append((_lemma_pair, (g, p, b["lemma_N"])))
    for m, mu in SHIFT_CASES:
        out.append((_shifted, (g, m, mu, b["shift_samples"], seed, b["shift_N"])))
    return out


def _run(task, timing):
    enable_timing(timing)
    fn, args = task
    result = fn(*args)
    return result if isinstance(result, list) else [result]


def run_suite(
    profile: str = "quick",
    g: ArithFn = SIGMA,
    seed: int = 0,
    jobs: int | None = None,
    timing: bool = False,
) -> tuple[list[Report], Report]:
    """Run every suite member; returns (members in canonical order, aggregate)."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}")
    work = tasks(profile, g, seed)
    jobs = jobs or os.cpu_count() or 1
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            chunks = list(pool.map(_run, work, [timing] * len(work)))
    else:
        chunks = [_run(t, timing) for t in work]
    members = [r for chunk in chunks for r in chunk]
    members.sort(key=lambda r: (r.claim_id, r.to_json()))
    aggregate = Report(
        "suite",
        {
            "profile": profile,
            "g": g,
            "members": [{"claim_id": r.claim_id, "status": r.status} for r in members],
        },
        worst_status(r.status for r in members),
        [{"claim_id": r.claim_id, "status": r.status} for r in members if not r.ok],
        seed=seed,
    )
    return members, aggregate
