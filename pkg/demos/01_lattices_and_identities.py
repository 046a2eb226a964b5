"""Build the three torus lattices and check the matrix identities behind the
closed-form spectra.

Run:  python demos/01_lattices_and_identities.py
"""
from collections import Counter

import numpy as np

import unionjack as uj

n, m = 4, 3
size = uj.LatticeSize(n, m)

# The square torus C_n x C_m: every vertex has degree 4.
grid = uj.build_torus_grid(size)
print("grid:", grid.vertex_count, "vertices,", grid.edge_count, "edges")

# Union Jack: one extra vertex in every square, joined to its four corners.
ujl, faces = uj.build_union_jack(size)
print("union jack:", ujl.vertex_count, "vertices,", ujl.edge_count, "edges,",
      "degrees", dict(Counter(ujl.degrees.tolist())))

# 4.8.8 (truncated square) lattice and its dual.
g488 = uj.build_488(size)
dual = uj.dual_of_488(g488)
print("4.8.8:", g488.vertex_count, "vertices, faces by length",
      dict(Counter(len(f) for f in g488.faces)))
print("dual of 4.8.8:", dual.vertex_count, "vertices,", dual.edge_count, "edges")

# Row-major numbering makes the grid adjacency a Kronecker sum.
a_n = uj.adjacency_matrix(uj.build_cycle(n))
a_m = uj.adjacency_matrix(uj.build_cycle(m))
e_n, e_m = np.eye(n, dtype=int), np.eye(m, dtype=int)
print("A(grid) == kron(E_m, A_n) + kron(A_m, E_n):",
      np.array_equal(uj.adjacency_matrix(grid), np.kron(e_m, a_n) + np.kron(a_m, e_n)))

# The vertex-face block M has Gram matrix (2E + A_m) x (2E + A_n).
mm = uj.face_vertex_incidence(size)
print("M M^T == kron(2E_m + A_m, 2E_n + A_n):",
      np.array_equal(mm @ mm.T, np.kron(2 * e_m + a_m, 2 * e_n + a_n)))

# The incidence matrix factors the signless Laplacian exactly.
inc = uj.incidence_matrix(ujl)
print("I I^T == Q:", np.array_equal(inc @ inc.T, uj.signless_laplacian(ujl)))

print()
print(ujl.to_edgelist().splitlines()[0])
