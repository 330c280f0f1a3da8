"""Cyclotomic integers, prime splitting in Q(zeta_m) and the exact verifiers
for non-vanishing of D'Arcais polynomials at roots of unity and their shifts.

Elements of Z[zeta_m] are stored in the power basis 1, zeta, ..., zeta^(phi(m)-1),
i.e. as residues in Z[x] / (Phi_m).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import NamedTuple, Sequence

from .arithfn import ArithFn
from .errors import (
    ConductorMismatch,
    HypothesisViolated,
    NonSquareRatio,
    NotCongruent,
    NotPrimitive,
)
from .gfp import (
    DEFAULT_SEED,
    _prime_divisors,
    check_prime,
    factor_gfp,
    reduce_mod_p,
    splits_into_linears,
    darcais_sequence_modp,
)
from .polycore import IntPoly, darcais_sequence, mul_coeffs
from .report import Report, stamp


def euler_phi(m: int) -> int:
    out = m
    for q in _prime_divisors(m):
        out -= out // q
    return out


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> IntPoly:
    """Phi_m, by dividing x^m - 1 by Phi_d for every proper divisor d of m."""
    if m < 1:
        raise ValueError("m must be positive")
    f = IntPoly([-1] + [0] * (m - 1) + [1])
    for d in divisors(m)[:-1]:
        q, r = f.divmod_monic(cyclotomic_poly(d))
        assert r.is_zero()
        f = q
    return f


@lru_cache(maxsize=None)
def _zeta_powers(m: int) -> tuple[tuple[int, ...], ...]:
    """Coordinates of zeta_m^e for e = 0..m-1."""
    phi = cyclotomic_poly(m)
    d = phi.degree
    out = []
    for e in range(m):
        r = IntPoly([0] * e + [1]) % phi
        out.append(tuple(r[k] for k in range(d)))
    return tuple(out)


def reduce_cyclotomic(coeffs: Sequence[int], m: int) -> tuple[int, ...]:
    """Coordinates of the polynomial `coeffs` evaluated at zeta_m."""
    phi_deg = euler_phi(m)
    folded = [0] * m
    for k, c in enumerate(coeffs):
        folded[k % m] += c
    powers = _zeta_powers(m)
    out = [0] * phi_deg
    for e, c in enumerate(folded):
        if c:
            if e < phi_deg:
                out[e] += c
            else:
                for k, v in enumerate(powers[e]):
                    if v:
                        out[k] += c * v
    return tuple(out)


class CycloElem:
    """Element of Z[zeta_m] in power-basis coordinates."""

    __slots__ = ("m", "coords")

    def __init__(self, m: int, coords: Sequence[int]):
        d = euler_phi(m)
        coords = [int(c) for c in coords]
        if len(coords) > d:
            coords = list(reduce_cyclotomic(coords, m))
        self.m = m
        self.coords = tuple(coords) + (0,) * (d - len(coords))

    @classmethod
    def zeta(cls, m: int) -> "CycloElem":
        if m <= 2:
            return cls(m, [1 if m == 1 else -1])
        return cls(m, [0, 1])

    @classmethod
    def from_int(cls, m: int, c: int) -> "CycloElem":
        return cls(m, [c])

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check(self, other):
        if isinstance(other, int):
            return CycloElem.from_int(self.m, other)
        if other.m != self.m:
            raise ConductorMismatch(f"conductors {self.m} and {other.m} differ")
        return other

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycloElem.from_int(self.m, other)
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self.m == other.m and self.coords == other.coords

    def __hash__(self):
        return hash((self.m, self.coords))

    def __repr__(self):
        return f"CycloElem({self.m}, {list(self.coords)})"

    def __add__(self, other):
        other = self._check(other)
        return CycloElem(self.m, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.m, [-a for a in self.coords])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloElem(self.m, [a * other for a in self.coords])
        other = self._check(other)
        prod = mul_coeffs(self.coords, other.coords)
        return CycloElem(self.m, reduce_cyclotomic(prod, self.m))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out, base = CycloElem.from_int(self.m, 1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def galois(self, j: int) -> "CycloElem":
        """Image under zeta -> zeta^j."""
        if gcd(j, self.m) != 1:
            raise ValueError("j must be a unit mod m")
        spread = [0] * self.m
        for k, c in enumerate(self.coords):
            spread[(j * k) % self.m] += c
        return CycloElem(self.m, reduce_cyclotomic(spread, self.m))

    def divisible_by(self, p: int) -> bool:
        return all(c % p == 0 for c in self.coords)

    def to_jsonable(self):
        return {"m": self.m, "coords": [str(c) for c in self.coords]}


def eval_at(poly: IntPoly, alpha: CycloElem) -> CycloElem:
    acc = CycloElem.from_int(alpha.m, 0)
    for c in reversed(poly.coeffs):
        acc = acc * alpha + c
    return acc


@dataclass(frozen=True)
class SplittingData:
    p: int
    m: int
    e: int
    f: int
    g_count: int

    def to_jsonable(self):
        return {"p": self.p, "m": self.m, "e": self.e, "f": self.f, "g_count": self.g_count}


def multiplicative_order(a: int, n: int) -> int:
    if n == 1:
        return 1
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def inertial_data(p: int, m: int) -> SplittingData:
    check_prime(p)
    a = 0
    m_p = m
    while m_p % p == 0:
        m_p //= p
        a += 1
    f = multiplicative_order(p, m_p)
    e = euler_phi(p**a)
    g_count = euler_phi(m) // (e * f)
    return SplittingData(p, m, e, f, g_count)


def _closed_form_R(p: int, m: int) -> bool:
    while m % p == 0:
        m //= p
    if p == 2:
        return m == 1
    return m in (1, 2)


def in_R_p(p: int, m: int) -> bool:
    """True iff p has inertial degree 1 in Q(zeta_m)."""
    result = inertial_data(p, m).f == 1
    if p in (2, 3):
        assert result == _closed_form_R(p, m), (p, m)
    return result


def in_R_p_closed_form(p: int, m: int) -> bool:
    """{2^l} for p = 2 and {2^a 3^l : a in {0, 1}} for p = 3."""
    if p not in (2, 3):
        raise ValueError("closed forms are known for p = 2, 3 only")
    return _closed_form_R(p, m)


def dedekind_kummer_check(p: int, m: int, seed: int = DEFAULT_SEED) -> Report:
    """Factor Phi_m mod p and compare with (e, f, g) from the inertial degree formula."""
    t0 = time.perf_counter()
    data = inertial_data(p, m)
    fl = factor_gfp(reduce_mod_p(cyclotomic_poly(m), p), seed)
    witnesses = []
    degs = sorted({f.degree for f, _ in fl.factors})
    mults = sorted({e for _, e in fl.factors})
    if degs != [data.f] or mults != [data.e] or len(fl.factors) != data.g_count:
        witnesses.append({"factor_degrees": degs, "multiplicities": mults, "count": len(fl.factors)})
    rep = Report(
        "dk.cyclotomic",
        {"p": p, "m": m, "splitting": data, "factorization": fl},
        "falsified" if witnesses else "verified",
        witnesses,
        seed=seed,
    )
    return stamp(rep, t0)


def eval_A_at_zeta(g: ArithFn, n: int, m: int) -> CycloElem:
    """A_n^g(zeta_m) in Z[zeta_m]; zero exactly when P_n^g(zeta_m) = 0."""
    a = darcais_sequence(g, n)[n]
    return CycloElem(m, reduce_cyclotomic(a.coeffs, m))


def verify_roots_of_unity(g: ArithFn, N: int, M: int, include_m2: bool = False) -> Report:
    """P_n^g(zeta_m) != 0 for 1 <= n <= N, 3 <= m <= M."""
    t0 = time.perf_counter()
    seq = darcais_sequence(g, N)
    gate = g.satisfies_mod3_gate()
    witnesses = []
    for m in range(3, M + 1):
        for n in range(1, N + 1):
            if not any(reduce_cyclotomic(seq[n].coeffs, m)):
                witnesses.append({"n": n, "m": m})
    params = {"g": g, "N": N, "M": M, "g3_mod3": g.g3_mod3(), "gate": gate}
    if include_m2:
        params["m2_zero_indices"] = [n for n in range(1, N + 1) if seq[n](-1) == 0]
    if witnesses:
        status = "falsified" if gate else "hypothesis_violated"
    else:
        status = "verified" if gate else "hypothesis_violated"
    return stamp(Report("nonvanishing.roots-of-unity", params, status, witnesses), t0)


# Polynomials over Z and Q used for minimal polynomials and discriminants.


def _content(c: Sequence[int]) -> int:
    out = 0
    for v in c:
        out = gcd(out, v)
    return out


def _primitive_part(p: IntPoly) -> IntPoly:
    if p.is_zero():
        return p
    c = _content(p.coeffs)
    if p.lc < 0:
        c = -c
    return IntPoly([v // c for v in p.coeffs])


def _pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    r = list(a.coeffs)
    db, lb = b.degree, b.lc
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [v * lb for v in r]
        for j, bj in enumerate(b.coeffs):
            r[shift + j] -= lr * bj
        while r and not r[-1]:
            r.pop()
    return IntPoly(r)


def gcd_q(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive, positive-leading gcd in Q[x] (== gcd in Z[x] up to content)."""
    a, b = _primitive_part(a), _primitive_part(b)
    while not b.is_zero():
        a, b = b, _primitive_part(_pseudo_rem(a, b))
    return _primitive_part(a)


def _bareiss_det(mat: list[list[int]]) -> int:
    n = len(mat)
    a = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Determinant of the Sylvester matrix."""
    m, n = f.degree, g.degree
    if m < 0 or n < 0:
        return 0
    if m == 0:
        return f.lc**n
    if n == 0:
        return g.lc**m
    size = m + n
    rows = []
    fr = list(reversed(f.coeffs))
    gr = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([0] * i + fr + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gr + [0] * (size - n - 1 - i))
    return _bareiss_det(rows)


def discriminant(f: IntPoly) -> int:
    """(-1)^(d(d-1)/2) Res(f, f') / lc(f)."""
    d = f.degree
    r = resultant(f, f.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    q, rem = divmod(sign * r, f.lc)
    assert rem == 0
    return q


def cyclotomic_field_discriminant(m: int) -> int:
    """(-1)^(phi/2) m^phi / prod_{q | m} q^(phi/(q-1)); 1 when phi(m) = 1."""
    phi = euler_phi(m)
    if phi == 1:
        return 1
    num = m**phi
    den = 1
    for q in _prime_divisors(m):
        den *= q ** (phi // (q - 1))
    sign = -1 if (phi // 2) % 2 else 1
    return sign * num // den


class MinPoly(NamedTuple):
    poly: IntPoly
    primitive: bool


def conjugate_product(alpha: CycloElem) -> IntPoly:
    """prod over j in (Z/m)^* of (x - sigma_j(alpha)); rational-integer coefficients."""
    m = alpha.m
    one = CycloElem.from_int(m, 1)
    poly = [one]  # coefficients in Z[zeta], low degree first
    for j in range(1, max(m, 2)):
        if gcd(j, m) != 1:
            continue
        root = alpha.galois(j)
        nxt = [CycloElem.from_int(m, 0)] * (len(poly) + 1)
        for k, c in enumerate(poly):
            nxt[k + 1] = nxt[k + 1] + c
            nxt[k] = nxt[k] - c * root
        poly = nxt
    if m == 1:
        poly = [CycloElem.from_int(1, -alpha.coords[0]), one]
    coeffs = []
    for c in poly:
        if any(c.coords[1:]):
            raise ArithmeticError("conjugate product has irrational coefficients")
        coeffs.append(c.coords[0])
    return IntPoly(coeffs)


def min_poly(alpha: CycloElem) -> MinPoly:
    """Minimal polynomial of alpha over Q, flagged with whether Q(alpha) = Q(zeta_m).

    The conjugate product equals Min_alpha^(phi(m)/deg); when it is not
    squarefree its radical is returned with primitive=False.
    """
    full = conjugate_product(alpha)
    common = gcd_q(full, full.derivative())
    if common.degree == 0:
        return MinPoly(full, True)
    q, r = full.divmod_monic(common)
    assert r.is_zero()
    return MinPoly(_primitive_part(q), False)


def index_coprime_check(alpha: CycloElem, p: int) -> Report:
    """p does not divide [O_K : Z[alpha]] for alpha = zeta_m (mod p O_K)."""
    t0 = time.perf_counter()
    check_prime(p)
    m = alpha.m
    if not (alpha - CycloElem.zeta(m)).divisible_by(p):
        raise NotCongruent(f"alpha is not congruent to zeta_{m} modulo {p}")
    mp = min_poly(alpha)
    if not mp.primitive:
        raise NotPrimitive("alpha does not generate Q(zeta_m)")
    D = discriminant(mp.poly)
    dK = cyclotomic_field_discriminant(m)
    ratio, rem = divmod(D, dK)
    if rem or ratio < 0 or isqrt(ratio) ** 2 != ratio:
        raise NonSquareRatio(f"disc(Min_alpha)/disc(K) = {D}/{dK} is not a square")
    kappa = isqrt(ratio)
    coprime = kappa % p != 0
    params = {
        "alpha": alpha,
        "p": p,
        "minpoly": mp.poly,
        "disc_minpoly": D,
        "disc_field": dK,
        "index": kappa,
    }
    witnesses = [] if coprime else [{"index": kappa, "p": p}]
    return stamp(
        Report("lemma.index-coprime", params, "verified" if coprime else "falsified", witnesses), t0
    )


def has_odd_prime_divisor(m: int) -> bool:
    while m % 2 == 0:
        m //= 2
    return m > 1


def shifted_routes(g: ArithFn, m: int, mu: int) -> list[int]:
    """Primes p through which non-vanishing on zeta_m + mu*O_K follows, given the gates.

    mu = 2: m needs an odd prime divisor. mu = 3: m not of the form 2^a 3^l with
    a in {0, 1}, and g(3) = 0, 1 mod 3. mu = 6 takes whichever applies.
    """
    routes = []
    if mu % 2 == 0 and has_odd_prime_divisor(m):
        routes.append(2)
    if mu % 3 == 0 and not _closed_form_R(3, m) and g.satisfies_mod3_gate():
        routes.append(3)
    return routes


def _shift_sample(g, m, p, mu, beta, seq, seed):
    zeta = CycloElem.zeta(m)
    alpha = zeta + beta * mu
    sub = {"beta": beta, "alpha": alpha, "route_p": p}
    problems = []
    mp = min_poly(alpha)
    sub["primitive"] = mp.primitive
    if not mp.primitive:
        problems.append("alpha is not a primitive element")
    else:
        idx = index_coprime_check(alpha, p)
        sub["index"] = idx.params["index"]
        if idx.status != "verified":
            problems.append("p divides the index")
    fl = factor_gfp(reduce_mod_p(mp.poly, p), seed)
    degs = sorted(fl.degrees())
    sub["minpoly"] = mp.poly
    sub["minpoly_factor_degrees_mod_p"] = degs
    if degs and degs[0] < 2:
        problems.append("Min_alpha mod p has a linear factor")
    # A_1..A_p splitting mod p covers every n through periodicity.
    Amod = darcais_sequence_modp(g, p, p)
    sub["A_splits_mod_p"] = all(splits_into_linears(Amod[r]) for r in range(1, p + 1))
    if not sub["A_splits_mod_p"]:
        problems.append("A_r mod p does not split into linear factors")
    powers = [CycloElem.from_int(m, 1)]
    for _ in range(len(seq) - 1):
        powers.append(powers[-1] * alpha)
    zeros = []
    for n in range(1, len(seq)):
        val = CycloElem.from_int(m, 0)
        for k, c in enumerate(seq[n].coeffs):
            if c:
                val = val + powers[k] * c
        if val.is_zero():
            zeros.append(n)
    sub["zero_indices"] = zeros
    if zeros:
        problems.append("A_n(alpha) = 0")
    sub["problems"] = problems
    sub["status"] = "verified" if not problems else ("falsified" if zeros else "inconclusive")
    return sub


def verify_shifted_nonvanishing(
    g: ArithFn,
    m: int,
    mu: int,
    beta_samples: int = 10,
    seed: int = 1,
    N: int = 20,
    box: int = 5,
) -> Report:
    """Spot-check P_n^g(zeta_m + mu*beta) != 0 for random beta in Z[zeta_m].

    mu = 2 or 3 exercises the two shifted-set statements, mu = 6 the
    corollary. Raises HypothesisViolated when no route applies.
    """
    t0 = time.perf_counter()
    if mu not in (2, 3, 6):
        raise ValueError("mu must be 2, 3 or 6")
    if m < 3:
        raise HypothesisViolated("m must be at least 3")
    if mu == 3 and not g.satisfies_mod3_gate():
        raise HypothesisViolated(f"g(3) = {g.g3_mod3()} mod 3; need 0 or 1")
    routes = shifted_routes(g, m, mu)
    if not routes:
        reasons = {
            2: f"m = {m} has no odd prime divisor",
            3: f"m = {m} is of the form 2^a 3^l with a in {{0, 1}}",
            6: f"no route applies for m = {m}",
        }
        raise HypothesisViolated(reasons[mu])
    rng = random.Random(seed)
    d = euler_phi(m)
    seq = darcais_sequence(g, N)
    samples = []
    for _ in range(beta_samples):
        beta = CycloElem(m, [rng.randint(-box, box) for _ in range(d)])
        for p in routes:
            samples.append(_shift_sample(g, m, p, mu, beta, seq, seed))
    bad = [s for s in samples if s["status"] != "verified"]
    if any(s["status"] == "falsified" for s in bad):
        status = "falsified"
    elif bad:
        status = "inconclusive"
    else:
        status = "verified"
    claim = f"nonvanishing.shift{mu}"
    params = {
        "g": g,
        "m": m,
        "mu": mu,
        "routes": routes,
        "samples": beta_samples,
        "box": box,
        "N": N,
        "per_sample": samples,
    }
    return stamp(Report(claim, params, status, bad, seed=seed), t0)


def dedekind_kummer_range(primes, M: int, seed: int = DEFAULT_SEED) -> Report:
    t0 = time.perf_counter()
    witnesses = []
    checked = 0
    for p in primes:
        for m in range(1, M + 1):
            rep = dedekind_kummer_check(p, m, seed)
            checked += 1
            if rep.status != "verified":
                witnesses.append({"p": p, "m": m, "detail": rep.witnesses})
    rep = Report(
        "dk.cyclotomic-range",
        {"primes": list(primes), "M": M, "checked": checked},
        "falsified" if witnesses else "verified",
        witnesses,
        seed=seed,
    )
    return stamp(rep, t0)


def verify_R_closed_forms(M: int) -> Report:
    """R_2, R_3 closed forms against inertial degrees for 1 <= m <= M."""
    t0 = time.perf_counter()
    witnesses = []
    for p in (2, 3):
        for m in range(1, M + 1):
            by_order = inertial_data(p, m).f == 1
            if by_order != in_R_p_closed_form(p, m):
                witnesses.append({"p": p, "m": m, "order_says": by_order})
    members = {p: [m for m in range(1, M + 1) if in_R_p_closed_form(p, m)] for p in (2, 3)}
    rep = Report(
        "cyclo.R-closed-forms",
        {"M": M, "R_2": members[2], "R_3": members[3]},
        "falsified" if witnesses else "verified",
        witnesses,
    )
    return stamp(rep, t0)
