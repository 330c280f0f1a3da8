"""Hook lengths, and the hook product formula as a polynomial identity."""

from darcais.hooks import hook_multiset, no_lhs_poly, partitions, verify_no_identity

for la in partitions(4):
    print(la, "hooks:", hook_multiset(la))

# Summing prod (1 - z/h^2) over partitions of n gives P_n at 1 - z.
for n in range(5):
    print(f"n = {n}:", [str(c) for c in no_lhs_poly(n)])

print("\nidentity for n <= 10:", verify_no_identity(10).status)
