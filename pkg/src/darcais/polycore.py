"""Exact integer polynomials and the D'Arcais sequences A_n^g = n! P_n^g.

Polynomials are dense: ``coeffs[k]`` is the coefficient of x^k and the zero
polynomial has no coefficients. ``A_n`` is the stored object; ``P_n`` is the
view ``A_n / n!``.
"""

from __future__ import annotations

import time
from fractions import Fraction
from math import factorial, lcm
from typing import Sequence

from .arithfn import SIGMA, ArithFn, values_upto
from .report import Report, stamp


def _trim(coeffs) -> tuple[int, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class IntPoly:
    """Dense polynomial with arbitrary-precision integer coefficients. Immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        self.coeffs = _trim([int(c) for c in coeffs])

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(c) == 1:
                s = mono
            else:
                s = f"{abs(c)}" + (f"*{mono}" if mono else "")
            terms.append(("-" if c < 0 else "+", s))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {sg} {s}" for sg, s in terms[1:])

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        other = _coerce(other)
        return IntPoly(mul_coeffs(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result, base = IntPoly.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        return eval_int(self, x)

    def derivative(self) -> "IntPoly":
        return IntPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def shift_down(self) -> "IntPoly":
        """Exact division by x; requires a zero constant term."""
        if self.coeffs and self.coeffs[0]:
            raise ValueError("constant term is nonzero; x does not divide")
        return IntPoly(self.coeffs[1:])

    def compose(self, inner: "IntPoly") -> "IntPoly":
        out = IntPoly()
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def divmod_monic(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Division by a monic polynomial, staying in Z[x]."""
        if not divisor.is_monic():
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = divisor.degree
        if len(rem) - 1 < d:
            return IntPoly(), IntPoly(rem)
        quot = [0] * (len(rem) - d)
        dc = divisor.coeffs
        for i in range(len(rem) - 1, d - 1, -1):
            q = rem[i]
            if q:
                quot[i - d] = q
                base = i - d
                for j in range(d):
                    rem[base + j] -= q * dc[j]
                rem[i] = 0
        return IntPoly(quot), IntPoly(rem[:d])

    def __mod__(self, divisor: "IntPoly") -> "IntPoly":
        return self.divmod_monic(divisor)[1]

    def to_jsonable(self):
        return [str(c) for c in self.coeffs]


def _coerce(obj) -> IntPoly:
    if isinstance(obj, IntPoly):
        return obj
    if isinstance(obj, int):
        return IntPoly.const(obj)
    return IntPoly(obj)


def mul_coeffs(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Schoolbook product of coefficient lists."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def eval_int(p: IntPoly, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def eval_gaussian(p: IntPoly, a: int, b: int) -> tuple[int, int]:
    """Exact value of p at a + b*i as (real, imag)."""
    re, im = 0, 0
    for c in reversed(p.coeffs):
        re, im = re * a - im * b + c, re * b + im * a
    return re, im


def eval_rational(p: IntPoly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


# Sequences keyed by arithmetic function; each list only ever grows.
_SEQ_CACHE: dict[ArithFn, list[IntPoly]] = {}


def darcais_sequence(g: ArithFn, N: int) -> list[IntPoly]:
    """[A_0, ..., A_N] with A_n = x * sum_k (n-1)!/(n-k)! g(k) A_{n-k}."""
    if N < 0:
        raise ValueError("N must be non-negative")
    seq = _SEQ_CACHE.setdefault(g, [IntPoly.const(1)])
    if len(seq) > N:
        return seq[: N + 1]
    gv = values_upto(g, N)
    raw = [list(p.coeffs) for p in seq]
    for n in range(len(seq), N + 1):
        acc = [0] * n  # coefficients of the sum, degree <= n-1
        falling = 1  # (n-1)!/(n-k)!
        for k in range(1, n + 1):
            if k > 1:
                falling *= n - k + 1
            w = falling * gv[k - 1]
            if w:
                for i, c in enumerate(raw[n - k]):
                    acc[i] += w * c
        new = [0] + acc
        raw.append(new)
        seq.append(IntPoly(new))
    return seq[: N + 1]


def darcais(g: ArithFn, n: int) -> IntPoly:
    return darcais_sequence(g, n)[n]


def exp_series_oracle(g: ArithFn, z: int, N: int) -> list[Fraction]:
    """Coefficients of exp(z * sum_n g(n) q^n / n) up to q^N.

    Evaluated as sum_j S^j / j! over integer-scaled powers of S, which does
    not share code or structure with the recurrence in darcais_sequence.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    L = lcm(*range(1, N + 1)) if N else 1
    gv = values_upto(g, N)
    # S*L has integer coefficients; S has no constant term.
    s = [0] + [z * gv[n - 1] * (L // n) for n in range(1, N + 1)]
    out = [Fraction(0)] * (N + 1)
    out[0] = Fraction(1)
    power = [1] + [0] * N  # (S*L)^j truncated
    for j in range(1, N + 1):
        nxt = [0] * (N + 1)
        for i, a in enumerate(power):
            if a:
                for k in range(1, N + 1 - i):
                    if s[k]:
                        nxt[i + k] += a * s[k]
        power = nxt
        denom = factorial(j) * L**j
        for n in range(j, N + 1):
            if power[n]:
                out[n] += Fraction(power[n], denom)
    return out


def product_expansion_oracle(r: int, N: int) -> list[int]:
    """Coefficients of prod_{n=1}^N (1 - q^n)^r up to q^N."""
    c = [1] + [0] * N
    for n in range(1, N + 1):
        if r >= 0:
            for _ in range(r):
                for k in range(N, n - 1, -1):
                    c[k] -= c[k - n]
        else:
            for _ in range(-r):
                for k in range(n, N + 1):
                    c[k] += c[k - n]
    return c


def generalized_pentagonals(N: int) -> set[int]:
    """{k(3k-1)/2 : k in Z} intersected with [0, N]."""
    out = set()
    k = 0
    while k * (3 * k - 1) // 2 <= N:
        out.add(k * (3 * k - 1) // 2)
        j = -k
        if j * (3 * j - 1) // 2 <= N:
            out.add(j * (3 * j - 1) // 2)
        k += 1
    return out


def pentagonal_pattern_check(N: int) -> Report:
    """A_n^sigma(-1) vanishes exactly off the generalized pentagonal numbers, n <= N."""
    t0 = time.perf_counter()
    pent = generalized_pentagonals(N)
    seq = darcais_sequence(SIGMA, N)
    euler = product_expansion_oracle(1, N)
    witnesses = []
    nonzero = []
    for n in range(N + 1):
        value = eval_int(seq[n], -1)
        if value:
            nonzero.append(n)
        predicted = n in pent
        if (value != 0) != predicted or value != euler[n] * factorial(n):
            witnesses.append(
                {"n": n, "A_n(-1)": value, "euler_coefficient": euler[n], "pentagonal": predicted}
            )
    status = "falsified" if witnesses else "verified"
    rep = Report(
        "identity.pentagonal",
        {"N": N, "nonzero_indices": nonzero},
        status,
        witnesses,
    )
    return stamp(rep, t0)


def verify_oracle_equivalence(g: ArithFn, zs: Sequence[int], N: int) -> Report:
    """A_n^g(z) = n! [q^n] exp(z sum g(k) q^k / k) for every z in zs and n <= N."""
    t0 = time.perf_counter()
    seq = darcais_sequence(g, N)
    witnesses = []
    for z in zs:
        series = exp_series_oracle(g, z, N)
        for n in range(N + 1):
            lhs = eval_int(seq[n], z)
            if Fraction(lhs) != series[n] * factorial(n):
                witnesses.append({"z": z, "n": n, "recurrence": lhs, "oracle": str(series[n])})
                break
    rep = Report(
        "oracle.exp-series",
        {"g": g, "z": list(zs), "N": N},
        "falsified" if witnesses else "verified",
        witnesses,
    )
    return stamp(rep, t0)


def triangular_signs(N: int) -> dict[int, int]:
    """{k(k+1)/2: (-1)^k (2k+1)} for triangular numbers up to N."""
    out = {}
    k = 0
    while k * (k + 1) // 2 <= N:
        out[k * (k + 1) // 2] = (-1) ** k * (2 * k + 1)
        k += 1
    return out


def pentagonal_signs(N: int) -> dict[int, int]:
    """{k(3k-1)/2: (-1)^k} for k in Z, up to N."""
    out = {}
    k = 0
    while k * (3 * k - 1) // 2 <= N:
        for j in (k, -k):
            e = j * (3 * j - 1) // 2
            if e <= N:
                out[e] = (-1) ** k
        k += 1
    return out


def verify_product_patterns(N: int) -> Report:
    """Euler's pentagonal and Jacobi's triangular expansions of prod (1 - q^n)^r, r = 1, 3."""
    t0 = time.perf_counter()
    witnesses = []
    seq = darcais_sequence(SIGMA, N)
    for r, expected in ((1, pentagonal_signs(N)), (3, triangular_signs(N))):
        got = product_expansion_oracle(r, N)
        for n, c in enumerate(got):
            if c != expected.get(n, 0):
                witnesses.append({"r": r, "n": n, "coefficient": c, "expected": expected.get(n, 0)})
                break
        # The same coefficients are D'Arcais values: P_n^sigma(-r).
        for n in range(N + 1):
            if eval_int(seq[n], -r) != got[n] * factorial(n):
                witnesses.append({"r": r, "n": n, "kind": "darcais_mismatch"})
                break
    rep = Report(
        "identity.euler-jacobi",
        {"N": N},
        "falsified" if witnesses else "verified",
        witnesses,
    )
    return stamp(rep, t0)
