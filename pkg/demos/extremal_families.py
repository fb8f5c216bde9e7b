#!/usr/bin/env python3
# The three extremal families behind the spectral bounds, built and measured.
import numpy as np

from fracext import (ExtremalParams, extremal_graph, extremal_edge_count,
                     emit_graph6, graph_stats, closed_form, largest_real_root,
                     largest_eigenvalue)
from fracext.spectral import signless_laplacian, distance_matrix_array

n, k = 11, 1

# general family: an s-clique joined to a clique plus s-2k+1 lone vertices
for s in (2, 3, 4):
    p = ExtremalParams(n=n, k=k, s=s)
    g = extremal_graph(p)
    st = graph_stats(g)
    print(f"s={s}: {emit_graph6(g)}  e={st.e}  min_degree={st.min_degree}")
    assert st.e == extremal_edge_count(p)

# s=2k is the densest member; its signless Laplacian radius has a closed
# characteristic cubic whose largest root matches the matrix computation
p2 = ExtremalParams(n=n, k=k, s=2 * k)
cubic = closed_form("f2", n=n, k=k)
root = largest_real_root(cubic)
eig = largest_eigenvalue(signless_laplacian(extremal_graph(p2)))
print(f"\ndense family cubic: {[str(c) for c in cubic.coefficients()]}")
print(f"largest root {root:.12g}  vs power iteration {eig:.12g}")

# the minimum-degree member takes s equal to delta; watch both spectral
# quantities move as delta grows with the order fixed
print("\n n  delta    q(G)            mu(G)")
for delta in (3, 4, 5):
    p3 = ExtremalParams(n=36, k=1, s=delta)
    g3 = extremal_graph(p3)
    q = largest_eigenvalue(signless_laplacian(g3))
    mu = largest_eigenvalue(distance_matrix_array(g3))
    print(f"{p3.n:3d} {delta:5d}  {q:14.10f}  {mu:14.10f}")

# orders past the graph6 limit still work; the matrix builders are direct
from fracext.spectral import family_q_matrix
big = family_q_matrix(90, 2, 7)
print(f"\norder 90 family Q matrix: shape {big.shape}, "
      f"radius {largest_eigenvalue(big):.8f}")
