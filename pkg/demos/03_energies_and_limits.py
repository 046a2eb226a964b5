"""Incidence energy and Laplacian-energy-like invariant, their per-site
limits by adaptive quadrature, and how quickly finite tori approach them.

Run:  python demos/03_energies_and_limits.py
"""
import unionjack as uj
from unionjack.asymptotics import asymptotic_constants, constants_to_json

for nm in [(3, 3), (6, 4), (16, 16)]:
    ie = uj.incidence_energy(nm)
    le = uj.lel(nm)
    print(f"{nm}: IE = {ie.value:.6f} ({ie.per_site:.6f}/site)   "
          f"LEL = {le.value:.6f} ({le.per_site:.6f}/site)")

# The closed-form sums agree with the eigensolver route.
print("IE(4,4) numeric:", uj.incidence_energy((4, 4), "numeric").value)

consts = asymptotic_constants(tol=1e-8)
print(constants_to_json(consts))

# Per site means divided by the 2nm vertices; per cell divides by nm.
# IE(n, m) is about 4.7385 nm and LEL(n, m) about 4.6840 nm.

print("IE convergence (the summand is analytic, so the error vanishes fast):")
for row in uj.convergence_study("ie", [(4, 4), (8, 8), (16, 16)]):
    print(f"  n={row.n:3d}  per_site={row.per_site:.15f}  gap={row.gap:.2e}")

print("LEL convergence (conical point at the origin, gap shrinks ~8x per doubling):")
for row in uj.convergence_study("lel", [(8, 8), (16, 16), (32, 32), (64, 64)]):
    print(f"  n={row.n:3d}  per_site={row.per_site:.12f}  gap={row.gap:.2e}")
