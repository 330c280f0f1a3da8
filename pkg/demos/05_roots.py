"""Where the zeros live: left half-plane, growth of the radius, and integer zeros."""

from darcais import SIGMA, darcais
from darcais.roots import complex_roots, hurwitz_report, kostant_han_scan, radius_report

rs = complex_roots(darcais(SIGMA, 8))
for z in sorted(rs.roots, key=lambda z: z.real):
    print(f"  {z.real:+.6f} {z.imag:+.6f}i")

print("\nzeros in the left half-plane for n <= 30:", hurwitz_report(SIGMA, 1, 30).status)
rep = radius_report(SIGMA, 2, 30)
print(f"largest max|z|/(n - 1) up to n = 30: {rep.params['running_max_ratio']:.4f}")

rep = kostant_han_scan(1, 8)
for b in rep.params["boundary_vanishing"]:
    print("vanishes on the boundary:", b)
