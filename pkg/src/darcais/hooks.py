"""Partitions, hook lengths and the Nekrasov-Okounkov hook formula.

The identity is checked coefficientwise in z:

    sum_{lambda |- n} prod_{h in H(lambda)} (1 - z/h^2) = P_n^sigma(1 - z)
"""

from __future__ import annotations

import time
from fractions import Fraction
from math import factorial
from typing import Iterator

from .arithfn import SIGMA
from .errors import BoundExceeded
from .polycore import IntPoly, darcais, darcais_sequence
from .report import Report, stamp

DEFAULT_BOUND = 20
HARD_CAP = 40

Partition = tuple[int, ...]


def _check_bound(n: int, limit: int):
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > min(limit, HARD_CAP):
        raise BoundExceeded(f"n = {n} exceeds enumeration limit {min(limit, HARD_CAP)}")


def _gen(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _gen(n - first, first):
            yield (first,) + rest


def partitions(n: int, limit: int = HARD_CAP) -> list[Partition]:
    """All partitions of n in reverse lexicographic order, (n) first and (1, ..., 1) last."""
    _check_bound(n, limit)
    return list(_gen(n, n))


def conjugate(la: Partition) -> Partition:
    if not la:
        return ()
    return tuple(sum(1 for part in la if part > j) for j in range(la[0]))


def hook_multiset(la: Partition) -> list[int]:
    """Hook lengths arm + leg + 1 of every cell, sorted decreasingly."""
    if any(a < b for a, b in zip(la, la[1:])) or any(part <= 0 for part in la):
        raise ValueError(f"{la!r} is not a partition")
    cols = conjugate(la)
    hooks = [la[i] - j + cols[j] - i - 1 for i in range(len(la)) for j in range(la[i])]
    return sorted(hooks, reverse=True)


def _poly_mul_frac(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def no_lhs_poly(n: int, limit: int = HARD_CAP) -> list[Fraction]:
    """Coefficients in z (lowest first) of the hook-length sum over partitions of n."""
    total = [Fraction(0)] * (n + 1)
    for la in partitions(n, limit):
        term = [Fraction(1)]
        for h in hook_multiset(la):
            term = _poly_mul_frac(term, [Fraction(1), Fraction(-1, h * h)])
        for k, c in enumerate(term):
            total[k] += c
    while len(total) > 1 and total[-1] == 0:
        total.pop()
    return total


def darcais_at_one_minus_z(n: int) -> list[Fraction]:
    """Coefficients in z of P_n^sigma(1 - z)."""
    comp = darcais(SIGMA, n).compose(IntPoly([1, -1]))
    nf = factorial(n)
    out = [Fraction(c, nf) for c in comp.coeffs] or [Fraction(0)]
    return out


def verify_no_identity(n_max: int, limit: int = HARD_CAP) -> Report:
    t0 = time.perf_counter()
    _check_bound(n_max, limit)
    witnesses = []
    for n in range(n_max + 1):
        lhs = no_lhs_poly(n, limit)
        rhs = darcais_at_one_minus_z(n)
        if lhs != rhs:
            witnesses.append(
                {"n": n, "hook_sum": [str(c) for c in lhs], "darcais": [str(c) for c in rhs]}
            )
    rep = Report(
        "identity.hook-length",
        {"n_max": n_max, "partitions_at_top": len(partitions(n_max, limit))},
        "falsified" if witnesses else "verified",
        witnesses,
    )
    return stamp(rep, t0)


def verify_partition_counts(N: int) -> Report:
    """P_n^sigma(1) equals the number of enumerated partitions of n, n <= N."""
    t0 = time.perf_counter()
    seq = darcais_sequence(SIGMA, N)
    witnesses = []
    counts = []
    for n in range(N + 1):
        count = len(partitions(n))
        counts.append(count)
        if seq[n](1) != count * factorial(n):
            witnesses.append({"n": n, "partitions": count, "A_n(1)": seq[n](1)})
    rep = Report(
        "oracle.partitions",
        {"N": N, "counts": counts},
        "falsified" if witnesses else "verified",
        witnesses,
    )
    return stamp(rep, t0)
