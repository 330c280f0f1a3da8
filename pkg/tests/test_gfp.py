import itertools

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from darcais.arithfn import SIGMA, power, table
from darcais.errors import NonMonic, NotPrime, ZeroPolynomial
from darcais.gfp import (
    GFpPoly,
    degree_spectrum,
    darcais_sequence_modp,
    factor_gfp,
    falling_factorial,
    is_irreducible,
    modp_nonvanishing_certificate,
    reduce_mod_p,
    splits_into_linears,
    verify_a3_sharpness,
    verify_falling_factorial,
    verify_linear_splitting,
    verify_periodicity,
    zmija_conditions,
)
from darcais.polycore import IntPoly, darcais, darcais_sequence

X = sympy.symbols("x")


def sympy_factors(f: GFpPoly):
    """Independent factorization oracle, normalized to monic residue lists."""
    expr = sum(c * X**k for k, c in enumerate(f.coeffs))
    _, facs = sympy.Poly(expr, X, modulus=f.p).factor_list()
    out = {}
    for fac, e in facs:
        coeffs = [int(c) % f.p for c in reversed(fac.all_coeffs())]
        out[GFpPoly(f.p, coeffs).monic()] = e
    return out


def test_reduce_examples():
    assert reduce_mod_p(darcais(SIGMA, 2), 3) == GFpPoly(3, [0, 0, 1])
    assert reduce_mod_p(darcais(SIGMA, 1), 2) == GFpPoly(2, [0, 1])
    assert reduce_mod_p(darcais(SIGMA, 3), 3) == GFpPoly(3, [0, 2, 0, 1])
    with pytest.raises(NotPrime):
        reduce_mod_p(darcais(SIGMA, 2), 4)


def test_factor_examples():
    fl = factor_gfp(GFpPoly(3, [1, 0, 1]))
    assert fl.factors == ((GFpPoly(3, [1, 0, 1]), 1),)
    fl = factor_gfp(GFpPoly(7, [2, 0, 1]))
    assert len(fl.factors) == 1 and fl.factors[0][0].degree == 2
    fl = factor_gfp(GFpPoly(5, [0, 3, 1]))
    assert dict(fl.factors) == {GFpPoly(5, [0, 1]): 1, GFpPoly(5, [3, 1]): 1}
    with pytest.raises(ZeroPolynomial):
        factor_gfp(GFpPoly(5, []))


def test_degree_spectrum_examples():
    assert degree_spectrum(reduce_mod_p(darcais(SIGMA, 3), 2)) == {1}
    assert degree_spectrum(GFpPoly(3, [1, 0, 1])) == {2}
    assert degree_spectrum(GFpPoly(5, [1])) == set()


def test_splits_examples():
    assert splits_into_linears(reduce_mod_p(darcais(SIGMA, 3), 3))
    assert not splits_into_linears(GFpPoly(3, [1, 0, 1]))
    assert splits_into_linears(GFpPoly(2, [0, 1]))


primes = st.sampled_from([2, 3, 5, 7, 11, 13])


@settings(max_examples=80, deadline=None)
@given(primes, st.lists(st.integers(0, 12), min_size=1, max_size=14), st.integers(0, 5))
def test_factorization_roundtrip_and_oracle(p, coeffs, seed):
    f = GFpPoly(p, coeffs)
    if f.is_zero():
        return
    fl = factor_gfp(f, seed)
    assert fl.product() == f
    assert len({q for q, _ in fl.factors}) == len(fl.factors)
    for q, _ in fl.factors:
        assert q.lc == 1 and is_irreducible(q)
    if f.degree >= 1:
        assert dict(fl.factors) == sympy_factors(f)


@settings(max_examples=40, deadline=None)
@given(primes, st.lists(st.integers(0, 12), min_size=2, max_size=8), st.integers(1, 3))
def test_factorization_of_powers(p, coeffs, e):
    f = GFpPoly(p, coeffs)
    if f.degree < 1:
        return
    fl = factor_gfp(f**e * f)
    assert fl.product() == f**e * f


def test_factorization_seed_independent_result():
    f = reduce_mod_p(darcais(SIGMA, 30), 13)
    assert factor_gfp(f, 1).factors == factor_gfp(f, 99).factors


@pytest.mark.parametrize("p,deg", [(2, 2), (2, 3), (3, 2), (5, 2), (3, 3)])
def test_irreducibility_against_enumeration(p, deg):
    # Brute force: a monic poly is irreducible iff no monic factor of degree <= deg/2.
    monics = {
        d: [GFpPoly(p, list(c) + [1]) for c in itertools.product(range(p), repeat=d)]
        for d in range(1, deg // 2 + 1)
    }
    for tail in itertools.product(range(p), repeat=deg):
        f = GFpPoly(p, list(tail) + [1])
        brute = not any((f % q).is_zero() for d in monics for q in monics[d])
        assert is_irreducible(f) == brute


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
@pytest.mark.parametrize("g", [SIGMA, power(1), power(0)])
def test_native_mod_p_recurrence(p, g):
    N = 40
    native = darcais_sequence_modp(g, N, p)
    exact = darcais_sequence(g, N)
    assert native == [reduce_mod_p(a, p) for a in exact]


@pytest.mark.parametrize("g", [SIGMA, power(1), power(2), table([1, 4, 6] + [1] * 60)])
def test_mod2_always_splits(g):
    assert verify_linear_splitting(g, 2, 60).status == "verified"


def test_mod3_splits_under_gate(custom_table):
    for g in (SIGMA, power(1), custom_table):
        assert g.satisfies_mod3_gate()
        assert verify_linear_splitting(g, 3, 60).status == "verified"
    bad = verify_linear_splitting(table([1, 3, 2] + [1] * 10), 3, 10)
    assert bad.status == "falsified" and bad.witnesses[0]["n"] == 3


@pytest.mark.parametrize(
    "g,p,N",
    [(SIGMA, 2, 50), (SIGMA, 7, 100), (power(1), 3, 60)],
)
def test_periodicity_examples(g, p, N):
    assert verify_periodicity(g, p, N).status == "verified"


@pytest.mark.parametrize("p", [2, 3, 5])
def test_falling_factorial_sigma(p):
    assert verify_falling_factorial(SIGMA, p).status == "verified"


def test_falling_factorial_needs_integer_values():
    # P_2 = x(x+2)/2 takes the value 3/2 at x = 1, and x(x+2) = x^2 mod 2.
    rep = verify_falling_factorial(power(1), 2)
    assert rep.status == "hypothesis_violated"
    assert rep.params["integer_valued_upto_p"] is False


def test_falling_factorial_poly():
    assert falling_factorial(3) == GFpPoly(3, [0, 2, 0, 1])


def test_a3_sharpness():
    assert verify_a3_sharpness().status == "verified"


def test_zmija_sigma_holds():
    rep = zmija_conditions(SIGMA)
    assert rep.status == "verified"
    assert [c["holds"] for c in rep.params["conditions"]] == [True, True, True]


def test_zmija_counterwitness():
    # g(2) = 0, g(3) = 1 gives A_3 = x(x^2 + 2) mod 5 with x^2 + 2 irreducible.
    g = table([1, 0, 1, 0, 0, 0, 0, 0, 0, 0])
    assert reduce_mod_p(darcais(g, 3), 5) == GFpPoly(5, [0, 2, 0, 1])
    rep = zmija_conditions(g)
    cond1 = rep.params["conditions"][0]
    assert not cond1["holds"]
    assert {"r": 3, "factor": GFpPoly(5, [2, 0, 1])} in cond1["offending_factors"]


def test_zmija_constant_one_reports_spectra():
    rep = zmija_conditions(power(0))
    assert len(rep.params["conditions"]) == 3
    for cond in rep.params["conditions"]:
        assert all(isinstance(s["degrees"], list) for s in cond["degree_spectra"])


def test_certificates():
    assert modp_nonvanishing_certificate(IntPoly([9, 0, 1]), SIGMA, 7).status == "certified"
    assert modp_nonvanishing_certificate(IntPoly([1, 0, 1]), SIGMA, 3).status == "certified"
    assert modp_nonvanishing_certificate(IntPoly([1, 1]), SIGMA, 2).status == "inconclusive"
    with pytest.raises(NonMonic):
        modp_nonvanishing_certificate(IntPoly([1, 2]), SIGMA, 3)
    with pytest.raises(NotPrime):
        modp_nonvanishing_certificate(IntPoly([1, 0, 1]), SIGMA, 9)


def test_certificate_inconclusive_when_factor_divides_A_r():
    # g(3) = 2 mod 3 makes x^2 + 1 divide A_3 mod 3.
    g = table([1, 0, 2])
    rep = modp_nonvanishing_certificate(IntPoly([1, 0, 1]), g, 3)
    assert rep.status == "inconclusive"
    assert any(w.get("r") == 3 for w in rep.witnesses)
