"""Exact computation and verification toolkit for D'Arcais polynomials.

A_n^g = n! P_n^g where P_0 = 1 and P_n = (x/n) sum_{k=1}^n g(k) P_{n-k}.
"""

from .arithfn import SIGMA, ArithFn, eval_g, parse_spec, power, table
from .cyclo import (
    CycloElem,
    cyclotomic_poly,
    dedekind_kummer_check,
    eval_A_at_zeta,
    in_R_p,
    index_coprime_check,
    inertial_data,
    min_poly,
    verify_roots_of_unity,
    verify_shifted_nonvanishing,
)
from .gfp import (
    GFpPoly,
    degree_spectrum,
    factor_gfp,
    modp_nonvanishing_certificate,
    reduce_mod_p,
    splits_into_linears,
    verify_falling_factorial,
    verify_periodicity,
    zmija_conditions,
)
from .hooks import hook_multiset, no_lhs_poly, partitions, verify_no_identity
from .polycore import (
    IntPoly,
    darcais,
    darcais_sequence,
    eval_gaussian,
    eval_int,
    exp_series_oracle,
    pentagonal_pattern_check,
    product_expansion_oracle,
)
from .report import Report
from .roots import (
    complex_roots,
    hurwitz_report,
    imaginary_axis_scan,
    kostant_han_scan,
    radius_report,
)

__version__ = "0.1.0"
