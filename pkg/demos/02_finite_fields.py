"""Reduction mod p: factor shapes, periodicity, and a nonvanishing certificate."""

from darcais import SIGMA, darcais, power
from darcais.gfp import (
    factor_gfp,
    modp_nonvanishing_certificate,
    reduce_mod_p,
    verify_falling_factorial,
    verify_periodicity,
    zmija_conditions,
)
from darcais.polycore import IntPoly

for p in (5, 7):
    for n in (6, 10):
        fl = factor_gfp(reduce_mod_p(darcais(SIGMA, n), p))
        print(f"A_{n} mod {p}: factor degrees {fl.degrees()}")

print("\nperiodicity mod 5 up to n = 60:", verify_periodicity(SIGMA, 5, 60).status)

# The falling factorial congruence needs integer-valued P_n. sigma has it, g(n) = n does not.
for g in (SIGMA, power(1)):
    print(f"falling factorial mod 3 for {g.label()}: {verify_falling_factorial(g, 3).status}")

for c in zmija_conditions(SIGMA).params["conditions"]:
    print(f"no factor of degree {c['forbidden_degree']} mod {c['p']}: {c['holds']}")

# x^2 + 1 has no root mod 3, and shares no factor with A_r mod 3 for r <= 3,
# so no A_n can vanish at i.
rep = modp_nonvanishing_certificate(IntPoly([1, 0, 1]), SIGMA, 3)
print("\ncertificate for A_n(i) != 0 via p = 3:", rep.status)
