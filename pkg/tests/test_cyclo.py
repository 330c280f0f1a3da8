import cmath

import pytest
import sympy
from sympy.polys.subresultants_qq_zz import sylvester
from hypothesis import given, settings, strategies as st

from darcais.arithfn import SIGMA, power, table
from darcais.cyclo import (
    CycloElem,
    cyclotomic_field_discriminant,
    cyclotomic_poly,
    dedekind_kummer_check,
    dedekind_kummer_range,
    discriminant,
    eval_A_at_zeta,
    euler_phi,
    in_R_p,
    in_R_p_closed_form,
    index_coprime_check,
    inertial_data,
    min_poly,
    multiplicative_order,
    resultant,
    verify_R_closed_forms,
    verify_roots_of_unity,
    verify_shifted_nonvanishing,
)
from darcais.errors import ConductorMismatch, HypothesisViolated, NotCongruent, NotPrime
from darcais.gfp import GFpPoly, factor_gfp, reduce_mod_p
from darcais.polycore import IntPoly, darcais

X = sympy.symbols("x")


def test_cyclotomic_examples():
    assert cyclotomic_poly(1) == IntPoly([-1, 1])
    assert cyclotomic_poly(4) == IntPoly([1, 0, 1])
    assert cyclotomic_poly(12) == IntPoly([1, 0, -1, 0, 1])


@pytest.mark.parametrize("m", range(1, 61))
def test_cyclotomic_products(m):
    phi = cyclotomic_poly(m)
    assert phi.degree == euler_phi(m)
    prod = IntPoly([1])
    for d in range(1, m + 1):
        if m % d == 0:
            prod = prod * cyclotomic_poly(d)
    assert prod == IntPoly([-1] + [0] * (m - 1) + [1])
    assert list(reversed(phi.coeffs)) == [int(c) for c in sympy.Poly(sympy.cyclotomic_poly(m, X)).all_coeffs()]


def test_inertial_examples():
    d = inertial_data(2, 5)
    assert (d.e, d.f, d.g_count) == (1, 4, 1)
    d = inertial_data(3, 4)
    assert (d.e, d.f, d.g_count) == (1, 2, 1)
    d = inertial_data(2, 8)
    assert (d.e, d.f, d.g_count) == (4, 1, 1)
    with pytest.raises(NotPrime):
        inertial_data(6, 5)


@given(st.sampled_from([2, 3, 5, 7, 11]), st.integers(1, 300))
def test_efg_product(p, m):
    d = inertial_data(p, m)
    assert d.e * d.f * d.g_count == euler_phi(m)


def test_R_p_examples():
    assert in_R_p(2, 16)
    assert in_R_p(3, 6)
    assert not in_R_p(2, 3)


def test_R_closed_forms_to_200():
    for m in range(1, 201):
        assert in_R_p(2, m) == (m & (m - 1) == 0)
        assert in_R_p_closed_form(3, m) == any(
            m == 2**a * 3**l for a in (0, 1) for l in range(6)
        )
    assert verify_R_closed_forms(200).status == "verified"


@pytest.mark.parametrize("p,m", [(3, 4), (2, 8), (5, 11)])
def test_dk_examples(p, m):
    assert dedekind_kummer_check(p, m).status == "verified"


def test_dk_five_eleven_two_quintics():
    fl = factor_gfp(reduce_mod_p(cyclotomic_poly(11), 5))
    assert sorted(f.degree for f, _ in fl.factors) == [5, 5]


def test_unramified_factor_degrees_equal_order():
    for p in (2, 3, 5, 7, 11, 13):
        for m in range(1, 61):
            if m % p == 0:
                continue
            fl = factor_gfp(reduce_mod_p(cyclotomic_poly(m), p))
            assert {f.degree for f, _ in fl.factors} == {multiplicative_order(p, m)}
            assert {e for _, e in fl.factors} == {1}


def test_dk_range():
    assert dedekind_kummer_range((2, 3, 5, 7), 40).status == "verified"


def _numeric(elem: CycloElem) -> complex:
    z = cmath.exp(2j * cmath.pi / elem.m)
    return sum(c * z**k for k, c in enumerate(elem.coords))


@settings(max_examples=60, deadline=None)
@given(
    st.integers(3, 24),
    st.lists(st.integers(-6, 6), min_size=1, max_size=12),
    st.lists(st.integers(-6, 6), min_size=1, max_size=12),
)
def test_cyclo_mul_matches_complex(m, a, b):
    x, y = CycloElem(m, a), CycloElem(m, b)
    assert abs(_numeric(x * y) - _numeric(x) * _numeric(y)) < 1e-6 * (1 + abs(_numeric(x * y)))
    assert abs(_numeric(x + y) - _numeric(x) - _numeric(y)) < 1e-9 * (1 + abs(_numeric(x + y)))


def test_conductor_mismatch():
    with pytest.raises(ConductorMismatch):
        CycloElem(5, [1]) + CycloElem(7, [1])


def test_galois_action():
    z = CycloElem.zeta(7)
    assert z.galois(3) == z**3
    assert (z * 2 + 1).galois(2) == z**2 * 2 + 1


def test_eval_A_at_zeta_examples():
    assert eval_A_at_zeta(SIGMA, 1, 3).coords == (0, 1)
    assert eval_A_at_zeta(SIGMA, 2, 4).coords == (-1, 3)
    assert eval_A_at_zeta(SIGMA, 5, 2).coords == (120,)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("m", [3, 4, 5, 8, 9, 12, 15])
def test_exact_modular_consistency(p, m):
    phi_mod = reduce_mod_p(cyclotomic_poly(m), p)
    for n in range(0, 25):
        exact = eval_A_at_zeta(SIGMA, n, m)
        direct = reduce_mod_p(darcais(SIGMA, n), p) % phi_mod
        assert GFpPoly(p, exact.coords) == direct


def test_roots_of_unity_examples():
    assert verify_roots_of_unity(SIGMA, 50, 20).status == "verified"
    assert verify_roots_of_unity(power(1), 30, 12).status == "verified"
    rep = verify_roots_of_unity(SIGMA, 20, 2, include_m2=True)
    from darcais.polycore import generalized_pentagonals

    pent = generalized_pentagonals(20)
    assert rep.params["m2_zero_indices"] == [n for n in range(1, 21) if n not in pent]


def test_roots_of_unity_gate():
    g = table([1, 1, 2] + [1] * 30)
    assert verify_roots_of_unity(g, 20, 10).status == "hypothesis_violated"


def test_min_poly_examples():
    z4 = CycloElem.zeta(4)
    assert min_poly(z4 + 2) == (IntPoly([5, -4, 1]), True)
    assert min_poly(CycloElem.zeta(3) + 2).poly == IntPoly([3, -3, 1])
    assert min_poly(z4 * 3).poly == IntPoly([9, 0, 1])


@pytest.mark.parametrize("m", range(1, 31))
def test_min_poly_of_zeta_is_cyclotomic(m):
    mp = min_poly(CycloElem.zeta(m))
    assert mp.primitive and mp.poly == cyclotomic_poly(m)


def test_min_poly_detects_non_primitive():
    # zeta_8 + zeta_8^-1 = sqrt(2) lies in a proper subfield.
    z = CycloElem.zeta(8)
    mp = min_poly(z + z.galois(7))
    assert not mp.primitive and mp.poly == IntPoly([-2, 0, 1])


def test_resultant_sign_convention():
    # Res(f, g) = lc(f)^deg g * prod g(roots of f).
    assert resultant(IntPoly([1, 1]), IntPoly([0, 0, 0, 1])) == -1
    assert resultant(IntPoly([0, 0, 0, 1]), IntPoly([1, 1])) == 1
    assert resultant(IntPoly([2, 1]), IntPoly([1, 1, 0, 1])) == -9


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=7), st.lists(st.integers(-9, 9), min_size=2, max_size=6))
def test_resultant_and_discriminant_against_sympy(a, b):
    f, g = IntPoly(a), IntPoly(b)
    if f.degree < 1 or g.degree < 1:
        return
    fs = sum(c * X**k for k, c in enumerate(f.coeffs))
    gs = sum(c * X**k for k, c in enumerate(g.coeffs))
    # sympy.resultant drops the (-1)^(deg f deg g) sign in some cases; the
    # Sylvester determinant is the definition itself.
    assert resultant(f, g) == sylvester(fs, gs, X).det()
    assert discriminant(f) == sympy.discriminant(fs, X)


@pytest.mark.parametrize("m", [3, 4, 5, 7, 8, 9, 12, 15, 16])
def test_field_discriminant_equals_disc_of_phi(m):
    # Z[zeta_m] is the full ring of integers, so disc(Phi_m) = disc(K).
    assert discriminant(cyclotomic_poly(m)) == cyclotomic_field_discriminant(m)


@pytest.mark.parametrize(
    "alpha,p,index,disc",
    [
        (CycloElem.zeta(4) + 2, 2, 1, -4),
        (CycloElem.zeta(4) * 3, 2, 3, -36),
        (CycloElem.zeta(3) + 2, 2, 1, -3),
    ],
)
def test_index_examples(alpha, p, index, disc):
    rep = index_coprime_check(alpha, p)
    assert rep.status == "verified"
    assert rep.params["index"] == index and rep.params["disc_minpoly"] == disc


def test_index_rejects_non_congruent():
    with pytest.raises(NotCongruent):
        index_coprime_check(CycloElem.zeta(5) + 3, 2)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([(5, 2), (7, 2), (4, 3), (5, 3), (8, 3)]), st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_index_coprime_property(mp, coords):
    m, p = mp
    alpha = CycloElem.zeta(m) + CycloElem(m, coords[: euler_phi(m)]) * p
    rep = index_coprime_check(alpha, p)
    assert rep.status == "verified"
    assert rep.params["index"] % p != 0


@pytest.mark.parametrize("m,mu", [(5, 2), (4, 3)])
def test_shifted_examples(m, mu):
    rep = verify_shifted_nonvanishing(SIGMA, m, mu, 10, 1, 20)
    assert rep.status == "verified"
    assert len(rep.params["per_sample"]) == 10
    for s in rep.params["per_sample"]:
        assert s["index"] % mu != 0 and min(s["minpoly_factor_degrees_mod_p"]) >= 2


def test_shifted_gate():
    with pytest.raises(HypothesisViolated):
        verify_shifted_nonvanishing(SIGMA, 4, 2)
    with pytest.raises(HypothesisViolated):
        verify_shifted_nonvanishing(SIGMA, 6, 3)
    with pytest.raises(HypothesisViolated):
        verify_shifted_nonvanishing(table([1, 1, 2] + [1] * 30), 5, 3)


def test_shifted_corollary_power_of_two_uses_mod3():
    rep = verify_shifted_nonvanishing(SIGMA, 8, 6, 3, 4, 10)
    assert rep.params["routes"] == [3] and rep.status == "verified"


def test_shifted_reproducible():
    a = verify_shifted_nonvanishing(SIGMA, 7, 2, 4, 11, 10).to_json()
    b = verify_shifted_nonvanishing(SIGMA, 7, 2, 4, 11, 10).to_json()
    assert a == b
