"""Polynomials over prime fields F_p and their complete factorization.

Coefficients are residues in [0, p), lowest degree first, with no trailing
zeros. Factorization is squarefree decomposition, then distinct-degree,
then Cantor-Zassenhaus equal-degree splitting driven by a seeded
``random.Random`` so results reproduce exactly.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .arithfn import ArithFn, values_upto
from .errors import NonMonic, NotPrime, ZeroPolynomial
from .polycore import IntPoly, darcais_sequence
from .report import Report, stamp

DEFAULT_SEED = 0


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return p


def _trim(c: list[int]) -> list[int]:
    while c and not c[-1]:
        c.pop()
    return c


class GFpPoly:
    """Polynomial over F_p. Immutable; arithmetic operators require equal p."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Sequence[int] = ()):
        self.p = p
        self.coeffs = tuple(_trim([c % p for c in coeffs]))

    @classmethod
    def _raw(cls, p, coeffs: list[int]) -> "GFpPoly":
        obj = cls.__new__(cls)
        obj.p = p
        obj.coeffs = tuple(_trim(coeffs))
        return obj

    @classmethod
    def x(cls, p) -> "GFpPoly":
        return cls._raw(p, [0, 1])

    @classmethod
    def one(cls, p) -> "GFpPoly":
        return cls._raw(p, [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __eq__(self, other):
        if not isinstance(other, GFpPoly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __lt__(self, other):
        return (self.degree, self.coeffs) < (other.degree, other.coeffs)

    def __repr__(self):
        return f"GFpPoly({self.p}, {list(self.coeffs)})"

    def __str__(self):
        return str(IntPoly(self.coeffs)) + f" (mod {self.p})"

    def _check(self, other: "GFpPoly"):
        if self.p != other.p:
            raise ValueError("moduli differ")

    def __add__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        p = self.p
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return GFpPoly._raw(p, out)

    def __neg__(self):
        p = self.p
        return GFpPoly._raw(p, [(-c) % p for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        p = self.p
        if isinstance(other, int):
            return GFpPoly._raw(p, [c * other % p for c in self.coeffs])
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return GFpPoly._raw(p, [])
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return GFpPoly._raw(p, [c % p for c in out])

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result, base = GFpPoly.one(self.p), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "GFpPoly"):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        p = self.p
        rem = list(self.coeffs)
        d = other.degree
        inv = pow(other.lc, -1, p)
        dc = other.coeffs
        if len(rem) - 1 < d:
            return GFpPoly._raw(p, []), GFpPoly._raw(p, rem)
        quot = [0] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            q = rem[i] * inv % p
            if q:
                quot[i - d] = q
                base = i - d
                for j in range(d):
                    rem[base + j] = (rem[base + j] - q * dc[j]) % p
            rem[i] = 0
        return GFpPoly._raw(p, quot), GFpPoly._raw(p, rem[:d])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "GFpPoly":
        if self.is_zero():
            return self
        return self * pow(self.lc, -1, self.p)

    def derivative(self) -> "GFpPoly":
        return GFpPoly(self.p, [k * c for k, c in enumerate(self.coeffs)][1:])

    def divides(self, other: "GFpPoly") -> bool:
        return (other % self).is_zero()

    def to_int_poly(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def to_jsonable(self):
        return list(self.coeffs)


def gcd(a: GFpPoly, b: GFpPoly) -> GFpPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def powmod(base: GFpPoly, e: int, mod: GFpPoly) -> GFpPoly:
    result = GFpPoly.one(base.p) % mod
    base = base % mod
    while e:
        if e & 1:
            result = result * base % mod
        base = base * base % mod
        e >>= 1
    return result


def reduce_mod_p(a: IntPoly, p: int) -> GFpPoly:
    check_prime(p)
    return GFpPoly(p, a.coeffs)


def darcais_sequence_modp(g: ArithFn, N: int, p: int) -> list[GFpPoly]:
    """A_0..A_N mod p computed natively in F_p[x] by the same recurrence."""
    check_prime(p)
    gv = [v % p for v in values_upto(g, N)]
    raw: list[list[int]] = [[1]]
    for n in range(1, N + 1):
        acc = [0] * n
        falling = 1
        for k in range(1, n + 1):
            if k > 1:
                falling = falling * (n - k + 1) % p
            w = falling * gv[k - 1] % p
            if w:
                for i, c in enumerate(raw[n - k]):
                    acc[i] += w * c
        raw.append([0] + [c % p for c in acc])
    return [GFpPoly(p, c) for c in raw]


@dataclass(frozen=True)
class FactorList:
    """Monic irreducible factors with multiplicities, plus the leading unit."""

    p: int
    unit: int
    factors: tuple[tuple[GFpPoly, int], ...]

    def product(self) -> GFpPoly:
        out = GFpPoly(self.p, [self.unit])
        for f, e in self.factors:
            out = out * f**e
        return out

    def degrees(self) -> set[int]:
        return {f.degree for f, _ in self.factors}

    def to_jsonable(self):
        return {
            "p": self.p,
            "unit": self.unit,
            "factors": [{"factor": list(f.coeffs), "multiplicity": e} for f, e in self.factors],
        }


def squarefree_decomposition(f: GFpPoly) -> list[tuple[GFpPoly, int]]:
    """Pairs (s_i, i) with f = lc * prod s_i^i and each s_i squarefree, coprime."""
    p = f.p
    f = f.monic()
    if f.degree < 1:
        return []
    out: list[tuple[GFpPoly, int]] = []
    fp = f.derivative()
    if fp.is_zero():
        # f(x) = h(x^p); in F_p the p-th root of each coefficient is itself.
        root = GFpPoly(p, f.coeffs[::p])
        return [(s, i * p) for s, i in squarefree_decomposition(root)]
    c = gcd(f, fp)
    w = f // c
    i = 1
    while not w.is_one():
        y = gcd(w, c)
        z = w // y
        if not z.is_one():
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if not c.is_one():
        root = GFpPoly(p, c.coeffs[::p])
        out.extend((s, j * p) for s, j in squarefree_decomposition(root))
    return out


def distinct_degree(f: GFpPoly) -> list[tuple[GFpPoly, int]]:
    """Split a monic squarefree f into (product of all degree-d factors, d)."""
    p = f.p
    out = []
    x = GFpPoly.x(p)
    h = x
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, f)
        g = gcd(h - x, f)
        if not g.is_one():
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree >= 1:
        out.append((f, f.degree))
    return out


def _random_poly(p: int, deg: int, rng: random.Random) -> GFpPoly:
    return GFpPoly(p, [rng.randrange(p) for _ in range(deg)])


def equal_degree(f: GFpPoly, d: int, rng: random.Random) -> list[GFpPoly]:
    """Split a monic squarefree f whose factors all have degree d."""
    if f.degree == d:
        return [f]
    p = f.p
    while True:
        a = _random_poly(p, f.degree, rng)
        if a.degree < 1:
            continue
        if p == 2:
            # Absolute trace F_{2^d} -> F_2 takes each value on half the field.
            t = a
            acc = a
            for _ in range(d - 1):
                t = t * t % f
                acc = acc + t
            b = acc
        else:
            b = powmod(a, (p**d - 1) // 2, f) - GFpPoly.one(p)
        g = gcd(b, f)
        if 0 < g.degree < f.degree:
            return equal_degree(g, d, rng) + equal_degree(f // g, d, rng)


def factor_gfp(f: GFpPoly, seed: int = DEFAULT_SEED) -> FactorList:
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    rng = random.Random(seed)
    factors: dict[GFpPoly, int] = {}
    for s, mult in squarefree_decomposition(f):
        for block, d in distinct_degree(s):
            for q in equal_degree(block, d, rng):
                factors[q] = factors.get(q, 0) + mult
    ordered = tuple(sorted(factors.items(), key=lambda fe: fe[0]))
    return FactorList(f.p, f.lc, ordered)


def _prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: GFpPoly) -> bool:
    """Rabin's test: x^(p^n) = x mod f and gcd(x^(p^(n/q)) - x, f) = 1 for primes q | n."""
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    p = f.p
    f = f.monic()
    x = GFpPoly.x(p)
    for q in _prime_divisors(n):
        h = x
        for _ in range(n // q):
            h = powmod(h, p, f)
        if not gcd(h - x, f).is_one():
            return False
    h = x
    for _ in range(n):
        h = powmod(h, p, f)
    return ((h - x) % f).is_zero()


def degree_spectrum(f: GFpPoly, seed: int = DEFAULT_SEED) -> set[int]:
    if f.is_zero():
        raise ZeroPolynomial("degree spectrum of the zero polynomial")
    return factor_gfp(f, seed).degrees()


def splits_into_linears(f: GFpPoly) -> bool:
    """True iff every irreducible factor of f has degree 1."""
    if f.is_zero():
        raise ZeroPolynomial("zero polynomial")
    # The radical of any product of linears divides x^p - x; checked on the
    # squarefree parts so no randomness is needed.
    p = f.p
    x = GFpPoly.x(p)
    for s, _ in squarefree_decomposition(f):
        if not ((powmod(x, p, s) - x) % s).is_zero():
            return False
    return True


def falling_factorial(p: int) -> GFpPoly:
    out = GFpPoly.one(p)
    for j in range(p):
        out = out * GFpPoly(p, [-j, 1])
    return out


def is_integer_valued(a: IntPoly, n: int) -> bool:
    """Whether a / n! maps Z to Z (checked on the deg + 1 consecutive points 0..deg)."""
    from math import factorial

    nf = factorial(n)
    return all(a(k) % nf == 0 for k in range(max(a.degree, 0) + 1))


def verify_periodicity(g: ArithFn, p: int, N: int) -> Report:
    """A_{lp+r} = A_r * A_p^l (mod p) for every n = lp + r <= N."""
    t0 = time.perf_counter()
    check_prime(p)
    if N < p:
        raise ValueError("need N >= p")
    seq = darcais_sequence(g, N)
    red = [reduce_mod_p(a, p) for a in seq]
    witnesses = []
    Ap = red[p]
    Ap_pow = GFpPoly.one(p)
    for ell in range(N // p + 1):
        if ell:
            Ap_pow = Ap_pow * Ap
        for r in range(p):
            n = ell * p + r
            if n > N:
                break
            rhs = red[r] * Ap_pow
            if rhs != red[n]:
                witnesses.append({"n": n, "p": p, "lhs": red[n], "rhs": rhs})
                break
        if witnesses:
            break
    rep = Report(
        "lemma.periodicity",
        {"g": g, "p": p, "N": N},
        "falsified" if witnesses else "verified",
        witnesses,
    )
    return stamp(rep, t0)


def verify_falling_factorial(g: ArithFn, p: int) -> Report:
    """A_p = x(x-1)...(x-p+1) (mod p), whose stated hypothesis is that P_n^g is integer-valued."""
    t0 = time.perf_counter()
    check_prime(p)
    seq = darcais_sequence(g, p)
    integer_valued = all(is_integer_valued(seq[n], n) for n in range(1, p + 1))
    lhs = reduce_mod_p(seq[p], p)
    rhs = falling_factorial(p)
    params = {
        "g": g,
        "p": p,
        "integer_valued_upto_p": integer_valued,
        "justification": (
            "P_n^g integer-valued for n <= p, checked on points 0..n"
            if integer_valued
            else "P_n^g is not integer-valued for some n <= p; congruence not implied"
        ),
    }
    holds = lhs == rhs
    witnesses = [] if holds else [{"A_p_mod_p": lhs, "falling_factorial": rhs}]
    if holds:
        status = "verified"
    elif not integer_valued:
        status = "hypothesis_violated"
    else:
        status = "falsified"
    return stamp(Report("lemma.falling-factorial", params, status, witnesses), t0)


ZMIJA_CONDITIONS = (
    # (condition, prime, forbidden factor degree, indices r)
    (1, 5, 2, range(3, 5)),
    (2, 7, 4, range(2, 7)),
    # Irreducible over F_11, dividing x^(11^6-1) - 1 and no x^(11^d-1) - 1 with
    # d in 1..10, d != 6: that is exactly the factors of degree 6.
    (3, 11, 6, range(2, 11)),
)


def zmija_conditions(g: ArithFn, seed: int = DEFAULT_SEED) -> Report:
    t0 = time.perf_counter()
    seq = darcais_sequence(g, 10)
    entries = []
    all_hold = True
    for cond, p, bad_deg, rs in ZMIJA_CONDITIONS:
        spectra = []
        offenders = []
        for r in rs:
            fl = factor_gfp(reduce_mod_p(seq[r], p), seed)
            spectra.append({"r": r, "degrees": sorted(fl.degrees())})
            offenders += [{"r": r, "factor": f} for f, _ in fl.factors if f.degree == bad_deg]
        holds = not offenders
        all_hold &= holds
        entries.append(
            {
                "condition": cond,
                "p": p,
                "forbidden_degree": bad_deg,
                "holds": holds,
                "degree_spectra": spectra,
                "offending_factors": offenders,
            }
        )
    rep = Report(
        "modp.forbidden-degrees",
        {"g": g, "conditions": entries},
        "verified" if all_hold else "falsified",
        [] if all_hold else [e for e in entries if not e["holds"]],
        seed=seed,
    )
    return stamp(rep, t0)


def modp_nonvanishing_certificate(
    minpoly: IntPoly, g: ArithFn, p: int, seed: int = DEFAULT_SEED
) -> Report:
    """One-sided certificate that P_n^g(alpha) != 0 for all n >= 1, alpha a root of minpoly.

    Any irreducible q | Min mod p dividing A_n = A_r * A_p^l must divide A_r
    (0 < r < p) or A_p. So it suffices that Min mod p has no linear factor and
    shares no factor with A_1, ..., A_p mod p.
    """
    t0 = time.perf_counter()
    check_prime(p)
    if not minpoly.is_monic():
        raise NonMonic("minimal polynomial must be monic")
    fl = factor_gfp(reduce_mod_p(minpoly, p), seed)
    A = darcais_sequence_modp(g, p, p)
    witnesses = []
    linear = [f for f, _ in fl.factors if f.degree < 2]
    for f in linear:
        witnesses.append({"reason": "linear factor of minpoly mod p", "factor": f})
    for f, _ in fl.factors:
        if f.degree < 2:
            continue
        for r in range(1, p + 1):
            if f.divides(A[r]):
                witnesses.append({"reason": "factor divides A_r mod p", "factor": f, "r": r})
    params = {
        "minpoly": minpoly,
        "g": g,
        "p": p,
        "factorization": fl,
        "A_p_splits": splits_into_linears(A[p]),
        "hypothesis_used": "A_n^g in Z[x] (integer g); integer-valuedness of P_n^g not assumed",
        "soundness": (
            "A_n = A_r * A_p^l mod p (periodicity); an irreducible factor of degree >= 2 "
            "of minpoly mod p dividing A_n must divide some A_r, 1 <= r <= p"
        ),
    }
    status = "inconclusive" if witnesses else "certified"
    return stamp(Report("cert.modp-nonvanishing", params, status, witnesses, seed=seed), t0)


def verify_linear_splitting(g: ArithFn, p: int, N: int) -> Report:
    """Every A_n^g mod p, n <= N, splits into linear factors.

    Always expected for p = 2; for p = 3 exactly when g(3) = 0, 1 mod 3.
    """
    t0 = time.perf_counter()
    check_prime(p)
    seq = darcais_sequence_modp(g, N, p)
    witnesses = []
    for n in range(1, N + 1):
        if not splits_into_linears(seq[n]):
            witnesses.append({"n": n, "A_n_mod_p": seq[n], "factorization": factor_gfp(seq[n])})
            break
    params = {"g": g, "p": p, "N": N}
    if p == 3:
        params["g3_mod3"] = g.g3_mod3()
    rep = Report("lemma.linear-split", params, "falsified" if witnesses else "verified", witnesses)
    return stamp(rep, t0)


def verify_a3_sharpness(residues=(0, 1, 2), g2_values=(0, 1, 2)) -> Report:
    """A_3^g mod 3 splits iff g(3) = 0, 1 mod 3, over tables [1, g(2), g(3)]."""
    t0 = time.perf_counter()
    witnesses = []
    cases = []
    for g2 in g2_values:
        for r in residues:
            g = ArithFn("table", values=(1, g2, r))
            a3 = reduce_mod_p(darcais_sequence(g, 3)[3], 3)
            expected_form = GFpPoly(3, [0, -r, 0, 1])
            split = splits_into_linears(a3)
            cases.append({"g2": g2, "g3": r, "A3_mod3": a3, "splits": split})
            if split != (r % 3 in (0, 1)) or a3 != expected_form:
                witnesses.append(cases[-1])
    rep = Report(
        "modp.a3-sharpness",
        {"cases": cases},
        "falsified" if witnesses else "verified",
        witnesses,
    )
    return stamp(rep, t0)
