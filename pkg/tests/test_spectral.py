import math
import random
from fractions import Fraction

import numpy as np
import pytest

from fracext import (Cubic, ExtremalParams, charpoly3, closed_form, complete,
                     cycle, extremal_graph, largest_eigenvalue,
                     largest_real_root, path, quotient, spectral_report,
                     wiener_g3, wiener_index)
from fracext.spectral import (ConvergenceError, adjacency_matrix,
                              distance_matrix_array, family_distance_matrix,
                              family_q_matrix, positional_blocks,
                              positional_blocks_prime, signless_laplacian)


def test_matrix_builders():
    g = path(4)
    A = adjacency_matrix(g)
    Q = signless_laplacian(g)
    assert (A == A.T).all() and A.trace() == 0
    assert (Q == A + np.diag(A.sum(axis=1))).all()
    D = distance_matrix_array(g)
    assert D[0, 3] == 3 and D[2, 1] == 1


def test_power_iteration_known_values():
    assert largest_eigenvalue(signless_laplacian(complete(5))) == pytest.approx(8, abs=1e-9)
    assert largest_eigenvalue(distance_matrix_array(complete(50))) == pytest.approx(49, abs=1e-8)
    # P3 distance spectrum peaks at 1 + sqrt(3)
    assert largest_eigenvalue(distance_matrix_array(path(3))) == pytest.approx(
        1 + math.sqrt(3), abs=1e-9)
    assert largest_eigenvalue(adjacency_matrix(cycle(4))) == pytest.approx(2, abs=1e-9)
    star = adjacency_matrix(complete(2)) * 0  # 2x2 zero matrix edge case
    assert largest_eigenvalue(star) == pytest.approx(0, abs=1e-12)


def test_power_iteration_vs_dense_solver():
    rng = np.random.default_rng(5)
    for _ in range(25):
        n = int(rng.integers(2, 40))
        M = rng.integers(0, 3, size=(n, n))
        M = np.triu(M, 1)
        M = M + M.T + np.diag(rng.integers(0, 5, size=n))
        want = float(np.linalg.eigvalsh(M.astype(float)).max())
        got = largest_eigenvalue(M)
        assert got == pytest.approx(want, abs=1e-8 * max(1, abs(want)))


def test_power_iteration_budget():
    with pytest.raises(ConvergenceError):
        largest_eigenvalue(distance_matrix_array(path(6)), max_iter=2)


def test_quotient_exact_and_equitable():
    p = ExtremalParams(n=11, k=1, s=2)
    q = quotient(signless_laplacian(extremal_graph(p)), positional_blocks(p))
    assert q.equitable and q.size == 3
    assert q[0, 0] == Fraction(11)  # degree 10 clique pair plus one internal edge
    # an arbitrary unbalanced partition is flagged, not rejected
    bad = quotient(signless_laplacian(path(4)), (range(0, 2), range(2, 3), range(3, 4)))
    assert not bad.equitable
    with pytest.raises(ValueError):
        quotient(signless_laplacian(path(4)), (range(0, 2), range(2, 4), range(0, 1)))


def test_quotient_largest_root_matches_matrix():
    p = ExtremalParams(n=13, k=2, s=4)
    g = extremal_graph(p)
    c = charpoly3(quotient(signless_laplacian(g), positional_blocks(p)))
    root = largest_real_root(c)
    eig = largest_eigenvalue(signless_laplacian(g))
    assert root == pytest.approx(eig, abs=1e-8)


def test_cubic_evaluation():
    c = Cubic(Fraction(-6), Fraction(11), Fraction(-6))  # (x-1)(x-2)(x-3)
    assert c.coefficients() == (1, -6, 11, -6)
    assert c(3.0) == 0.0 and c(0.0) == -6.0
    assert largest_real_root(c) == pytest.approx(3.0, abs=1e-12)


def test_largest_real_root_edge_cases():
    # (x-2)(x-1)(x+5)
    assert largest_real_root(Cubic(Fraction(2), Fraction(-13), Fraction(10))) == \
        pytest.approx(2.0, abs=1e-12)
    assert largest_real_root(Cubic(Fraction(0), Fraction(0), Fraction(0))) == 0.0
    # (x+1)^3: a triple root caps sign-based solvers at cbrt(eps) ~ 5e-6
    assert largest_real_root(Cubic(Fraction(3), Fraction(3), Fraction(1))) == \
        pytest.approx(-1.0, abs=1e-4)
    # single real root among a complex pair: x^3 - x^2 + x - 1 = (x-1)(x^2+1)
    assert largest_real_root(Cubic(Fraction(-1), Fraction(1), Fraction(-1))) == \
        pytest.approx(1.0, abs=1e-12)


def test_largest_real_root_vs_numpy():
    rng = random.Random(31)
    for _ in range(60):
        c2, c1, c0 = (rng.randint(-30, 30) for _ in range(3))
        cubic = Cubic(Fraction(c2), Fraction(c1), Fraction(c0))
        roots = np.roots([1, c2, c1, c0])
        want = max(r.real for r in roots if abs(r.imag) < 1e-9)
        assert largest_real_root(cubic) == pytest.approx(want, abs=1e-7)


def test_frozen_dense_family_cubic():
    c = closed_form("f2", n=11, k=1)
    assert c.coefficients() == (1, -29, 212, -288)
    root = largest_real_root(c)
    assert root == pytest.approx(10 + 2 * math.sqrt(17), abs=1e-10)
    g2 = extremal_graph(ExtremalParams(n=11, k=1, s=2))
    assert root == pytest.approx(largest_eigenvalue(signless_laplacian(g2)), abs=1e-8)


def test_closed_form_guards():
    with pytest.raises(ValueError):
        closed_form("f2", n=3, k=1)
    with pytest.raises(ValueError):
        closed_form("f_pi_1", n=5, k=1, s=3)       # below the interior order
    with pytest.raises(ValueError):
        closed_form("f_pi_prime_1", k=1, s=2)      # needs s >= 2k+1
    with pytest.raises(ValueError):
        closed_form("f3_q", n=12, k=1, delta=2)    # delta >= 2k+1
    with pytest.raises(ValueError):
        closed_form("phi_B3_case2", k=1, s=3, delta=3)  # needs s > delta
    with pytest.raises(ValueError):
        closed_form("no_such_family", k=1)


def test_each_family_matches_one_constructed_quotient():
    """Spot instances of every closed form against an explicit matrix."""
    def q_cubic(p):
        return charpoly3(quotient(signless_laplacian(extremal_graph(p)),
                                  positional_blocks(p)))

    def d_cubic(p):
        return charpoly3(quotient(distance_matrix_array(extremal_graph(p)),
                                  positional_blocks(p)))

    assert closed_form("f2", n=12, k=2) == q_cubic(ExtremalParams(12, 2, 4))
    assert closed_form("f_pi_1", n=11, k=1, s=3) == q_cubic(ExtremalParams(11, 1, 3))
    assert closed_form("f3_q", n=12, k=1, delta=3) == q_cubic(ExtremalParams(12, 1, 3))
    assert closed_form("phi_B1", n=11, k=1, s=3) == d_cubic(ExtremalParams(11, 1, 3))
    assert closed_form("phi_B3_case1", n=12, k=1, delta=3) == d_cubic(ExtremalParams(12, 1, 3))

    p = ExtremalParams(5, 1, 3)  # boundary order, no inner clique
    prime = charpoly3(quotient(signless_laplacian(extremal_graph(p)),
                               positional_blocks_prime(p)))
    assert closed_form("f_pi_prime_1", k=1, s=3) == prime

    # case 2 sits at the boundary order with the clique size above delta
    pb = ExtremalParams(7, 1, 3)
    case2 = charpoly3(quotient(distance_matrix_array(extremal_graph(pb)),
                               positional_blocks(pb)))
    assert closed_form("phi_B3_case2", k=1, s=4, delta=3) == case2


def test_family_matrices_match_graph_construction():
    for n, k, s in ((11, 1, 2), (13, 2, 5), (20, 1, 4), (64, 2, 6)):
        p = ExtremalParams(n, k, s)
        g = extremal_graph(p)
        assert (family_q_matrix(n, k, s) == signless_laplacian(g)).all()
        assert (family_distance_matrix(n, k, s) == distance_matrix_array(g)).all()


def test_spectral_report_fields():
    rep = spectral_report(cycle(5))
    assert rep.n == 5 and rep.e == 5 and rep.connected
    assert rep.q_radius == pytest.approx(4.0, abs=1e-9)
    assert rep.distance_radius == pytest.approx(6.0, abs=1e-9)
    assert rep.wiener == 15
    broken = spectral_report(Graph_from_parts())
    assert not broken.connected
    assert broken.distance_radius is None and broken.wiener is None


def Graph_from_parts():
    from fracext import disjoint_union
    return disjoint_union(complete(3), complete(2))


def test_wiener_g3_closed_form():
    for n, k, d in ((20, 1, 4), (36, 1, 3), (30, 2, 6)):
        g3 = extremal_graph(ExtremalParams(n, k, d))
        assert wiener_g3(n, k, d) == wiener_index(g3)
