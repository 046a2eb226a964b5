"""Closed-form Union Jack spectra against a Jacobi eigensolver run on the
explicitly built matrices.

Run:  python demos/02_spectra.py
"""
import numpy as np

import unionjack as uj

size = (5, 4)
ujl, _ = uj.build_union_jack(size)

q_closed = uj.closed_form_q_spectrum(size)
q_numeric = uj.numeric_spectrum(uj.signless_laplacian(ujl))
print("first entries of the signless Laplacian spectrum:")
for entry in q_closed.entries()[:4]:
    print("  ", entry)

cmp = uj.compare_spectra(q_closed.values, q_numeric.values, tol=1e-8)
print(f"Q: max |closed - Jacobi| = {cmp.max_abs_diff:.2e}  "
      f"({q_numeric.sweeps} sweeps, residual {q_numeric.residual:.1e})")

l_closed = uj.closed_form_l_spectrum(size)
l_numeric = uj.numeric_spectrum(uj.laplacian(ujl))
cmp = uj.compare_spectra(l_closed.values, l_numeric.values, tol=1e-8)
print(f"L: max |closed - Jacobi| = {cmp.max_abs_diff:.2e}")

# The lattice has triangles, so the two spectra differ.
print("smallest q:", q_closed.sorted_values()[0], " smallest mu:", l_closed.sorted_values()[0])
print("traces:", q_closed.values.sum(), l_closed.values.sum(), "expected", 12 * 5 * 4)

# Dual of the 4.8.8 lattice is the Union Jack lattice: same Laplacian spectrum.
dual = uj.dual_of_488(uj.build_488(size))
print("dual 4.8.8 vs Union Jack:",
      uj.compare_spectra(uj.numeric_spectrum(uj.laplacian(dual)).values, l_closed.values))

# Adjacency eigenvalues of a cycle.
print("C_6:", np.round(uj.cycle_spectrum(6), 12))
