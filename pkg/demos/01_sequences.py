"""The polynomials A_n = n! P_n for a few choices of g, and two independent checks."""

from math import factorial

from darcais import SIGMA, darcais, power
from darcais.polycore import eval_int, exp_series_oracle, product_expansion_oracle

print("A_n for g = sigma:")
for n in range(1, 6):
    print(f"  A_{n} =", darcais(SIGMA, n).coeffs)

print("\nA_n for g(n) = n:")
for n in range(1, 5):
    print(f"  A_{n} =", darcais(power(1), n).coeffs)

# Evaluating at x = -1 gives n! times the coefficients of prod (1 - q^n).
seq = [eval_int(darcais(SIGMA, n), -1) for n in range(16)]
euler = product_expansion_oracle(1, 15)
print("\nA_n(-1)/n!        :", [v // factorial(n) for n, v in enumerate(seq)])
print("prod (1 - q^n)    :", euler)

# The exp-series form is computed independently of the recurrence.
oracle = exp_series_oracle(SIGMA, 2, 8)
print("\nexp-series oracle at z = 2, n <= 8:", [int(c * factorial(n)) for n, c in enumerate(oracle)])
print("recurrence at z = 2             :", [eval_int(darcais(SIGMA, n), 2) for n in range(9)])
