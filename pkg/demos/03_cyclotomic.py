"""Values of A_n at roots of unity, prime splitting, and shifted arguments."""

from darcais import SIGMA
from darcais.cyclo import (
    CycloElem,
    cyclotomic_poly,
    eval_A_at_zeta,
    inertial_data,
    min_poly,
    verify_roots_of_unity,
    verify_shifted_nonvanishing,
)

print("Phi_12 =", cyclotomic_poly(12).coeffs)
print("A_4(zeta_5) in the power basis:", eval_A_at_zeta(SIGMA, 4, 5).coords)

for p, m in ((2, 7), (3, 8), (5, 12)):
    s = inertial_data(p, m)
    print(f"p = {p} in Q(zeta_{m}): e = {s.e}, f = {s.f}, g = {s.g_count}")

rep = verify_roots_of_unity(SIGMA, 40, 20)
print("\nA_n(zeta_m) != 0 for n <= 40, 3 <= m <= 20:", rep.status)

alpha = CycloElem.zeta(5) + CycloElem(5, [2, 0, 2, 0])
print("minimal polynomial of zeta_5 + 2 + 2 zeta_5^2:", min_poly(alpha).poly.coeffs)

rep = verify_shifted_nonvanishing(SIGMA, 7, 2, beta_samples=3)
print("A_n(zeta_7 + 2 beta) != 0 on three random beta:", rep.status)
