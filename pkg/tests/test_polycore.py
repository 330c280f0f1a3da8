from fractions import Fraction
from math import factorial

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from darcais.arithfn import SIGMA, power, table
from darcais.hooks import partitions
from darcais.polycore import (
    IntPoly,
    darcais,
    darcais_sequence,
    eval_gaussian,
    eval_int,
    exp_series_oracle,
    generalized_pentagonals,
    pentagonal_pattern_check,
    product_expansion_oracle,
)


def test_first_terms():
    assert darcais(SIGMA, 0) == IntPoly([1])
    assert darcais(SIGMA, 1) == IntPoly([0, 1])
    assert darcais(SIGMA, 3) == IntPoly([0, 8, 9, 1])


@given(st.lists(st.integers(-50, 50), min_size=2, max_size=2))
def test_second_and_third_terms_general_g(vals):
    g = table([1] + vals)
    g2, g3 = vals
    assert darcais(g, 2) == IntPoly([0, g2, 1])
    assert darcais(g, 3) == IntPoly([0, 2 * g3, 3 * g2, 1])


def test_recurrence_in_rational_form():
    # P_n = (x/n) sum g(k) P_{n-k}, checked at a few rational points.
    seq = darcais_sequence(SIGMA, 12)
    for x in (Fraction(1, 3), Fraction(-7, 2), Fraction(5)):
        P = []
        for n, a in enumerate(seq):
            num = sum(c * x**k for k, c in enumerate(a.coeffs))
            P.append(num / factorial(n))
        for n in range(1, 13):
            assert P[n] == x / n * sum(SIGMA(k) * P[n - k] for k in range(1, n + 1))


def test_sigma_structure():
    for n, a in enumerate(darcais_sequence(SIGMA, 40)):
        if n == 0:
            continue
        assert a.degree == n and a.is_monic() and a[0] == 0
        assert all(c >= 0 for c in a.coeffs)


@pytest.mark.parametrize("g", [SIGMA, power(1), power(0)])
@pytest.mark.parametrize("z", [-3, -1, 0, 1, 2, 5])
def test_exp_series_oracle_matches_recurrence(g, z):
    N = 25
    series = exp_series_oracle(g, z, N)
    seq = darcais_sequence(g, N)
    for n in range(N + 1):
        assert series[n] * factorial(n) == eval_int(seq[n], z)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=11, max_size=11), st.integers(-6, 6))
def test_exp_series_oracle_random_tables(vals, z):
    g = table([1] + vals)
    series = exp_series_oracle(g, z, 12)
    seq = darcais_sequence(g, 12)
    assert all(series[n] * factorial(n) == seq[n](z) for n in range(13))


def test_exp_series_examples():
    assert exp_series_oracle(SIGMA, 0, 6) == [1, 0, 0, 0, 0, 0, 0]
    assert exp_series_oracle(SIGMA, 1, 5) == [len(partitions(n)) for n in range(6)]
    assert exp_series_oracle(SIGMA, -8, 3)[3] == 0


def _naive_product(r, N):
    # Truncated power-series arithmetic via sympy's exact polynomials.
    q = sympy.symbols("q")
    acc = sympy.Poly(1, q)
    for n in range(1, N + 1):
        if r >= 0:
            factor = sympy.Poly(1 - q**n, q) ** r
        else:
            geo = sympy.Poly(sum(q ** (n * j) for j in range(N // n + 1)), q)
            factor = geo ** (-r)
        acc = sympy.Poly((acc * factor).as_expr(), q)
        acc = sympy.Poly(sum(acc.coeff_monomial(q**k) * q**k for k in range(N + 1)), q)
    return [int(acc.coeff_monomial(q**k)) for k in range(N + 1)]


@pytest.mark.parametrize("r", [-2, 1, 3, 8])
def test_product_oracle_against_sympy(r):
    assert product_expansion_oracle(r, 10) == _naive_product(r, 10)


def test_product_oracle_examples():
    assert product_expansion_oracle(1, 7) == [1, -1, -1, 0, 0, 1, 0, 1]
    assert product_expansion_oracle(3, 6) == [1, -3, 0, 5, 0, 0, -7]
    assert product_expansion_oracle(0, 4) == [1, 0, 0, 0, 0]
    assert product_expansion_oracle(8, 3)[3] == 0


@pytest.mark.parametrize("r", [-4, -1, 1, 2, 3, 24])
def test_product_oracle_is_darcais_at_minus_r(r):
    N = 20
    coeffs = product_expansion_oracle(r, N)
    seq = darcais_sequence(SIGMA, N)
    for n in range(N + 1):
        assert coeffs[n] * factorial(n) == seq[n](-r)


def test_partition_count_identity():
    seq = darcais_sequence(SIGMA, 30)
    for n in range(31):
        assert seq[n](1) == factorial(n) * len(partitions(n))


def test_eval_int_examples():
    assert eval_int(darcais(SIGMA, 3), 1) == 18
    assert eval_int(darcais(SIGMA, 1), 0) == 0
    assert eval_int(darcais(SIGMA, 3), -8) == 0


def test_eval_gaussian_examples():
    assert eval_gaussian(darcais(SIGMA, 2), 0, 1) == (-1, 3)
    assert eval_gaussian(darcais(SIGMA, 1), 0, 1) == (0, 1)
    assert eval_gaussian(darcais(SIGMA, 2), 0, 3) == (-9, 9)


@given(st.lists(st.integers(-20, 20), max_size=8), st.integers(-9, 9), st.integers(-9, 9))
def test_eval_gaussian_matches_complex(coeffs, a, b):
    p = IntPoly(coeffs)
    z = complex(a, b)
    val = sum(c * z**k for k, c in enumerate(p.coeffs)) if p.coeffs else 0
    re, im = eval_gaussian(p, a, b)
    assert abs(complex(re, im) - val) <= 1e-9 * (1 + abs(val))


@given(
    st.lists(st.integers(-30, 30), max_size=6),
    st.lists(st.integers(-30, 30), max_size=6),
    st.integers(-5, 5),
)
def test_intpoly_ring_ops(a, b, x):
    pa, pb = IntPoly(a), IntPoly(b)
    assert (pa * pb)(x) == pa(x) * pb(x)
    assert (pa + pb)(x) == pa(x) + pb(x)
    assert (pa - pb)(x) == pa(x) - pb(x)
    assert pa.compose(pb)(x) == pa(pb(x))


def test_divmod_monic():
    f = IntPoly([5, 0, 3, 1, 2])
    d = IntPoly([1, 0, 1])
    q, r = f.divmod_monic(d)
    assert q * d + r == f and r.degree < 2


def test_generalized_pentagonals():
    assert sorted(generalized_pentagonals(26)) == [0, 1, 2, 5, 7, 12, 15, 22, 26]


def test_pentagonal_pattern_examples():
    r = pentagonal_pattern_check(7)
    assert r.status == "verified" and r.params["nonzero_indices"] == [0, 1, 2, 5, 7]
    assert pentagonal_pattern_check(0).status == "verified"
    r = pentagonal_pattern_check(12)
    assert r.status == "verified" and 12 in r.params["nonzero_indices"]
