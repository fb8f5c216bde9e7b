"""Spectral machinery: matrices, largest eigenvalues, exact quotients,
and the closed-form characteristic cubics of the extremal families.

Numeric spectral radii come from shifted power iteration; everything
structural (quotient matrices, characteristic polynomials, closed forms)
is exact over the rationals, so the identity between a family's cubic and
charpoly3(quotient(...)) can be asserted coefficient by coefficient.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import (Graph, ExtremalParams, distance_matrix, extremal_graph,
                     is_connected, wiener_index)

DEFAULT_TOL = 1e-10
MAX_ITER = 10 ** 6


class ConvergenceError(RuntimeError):
    """Power iteration failed to meet tolerance within the iteration cap."""

    def __init__(self, residual: float, iterations: int):
        super().__init__(f"no convergence after {iterations} iterations, residual {residual:.3e}")
        self.residual = residual


# ---------------------------------------------------------------------------
# matrix builders
# ---------------------------------------------------------------------------

def adjacency_matrix(g: Graph) -> np.ndarray:
    A = np.zeros((g.n, g.n), dtype=np.int64)
    for v in range(g.n):
        m = g.rows[v]
        while m:
            low = m & -m
            A[v, low.bit_length() - 1] = 1
            m ^= low
    return A


def signless_laplacian(g: Graph) -> np.ndarray:
    """Degree-diagonal plus adjacency."""
    A = adjacency_matrix(g)
    return A + np.diag(A.sum(axis=1))


def distance_matrix_array(g: Graph) -> np.ndarray:
    return np.array(distance_matrix(g), dtype=np.int64)


def build_matrix(g: Graph, kind: str) -> np.ndarray:
    if kind == "adjacency":
        return adjacency_matrix(g)
    if kind == "signless_laplacian":
        return signless_laplacian(g)
    if kind == "distance":
        return distance_matrix_array(g)
    raise ValueError(f"unknown matrix kind {kind!r}")


def _family_class_sizes(n: int, k: int, s: int) -> tuple[int, int, int]:
    n1 = n - 2 * s + 2 * k - 1
    t = s - 2 * k + 1
    if k < 1 or s < 2 * k or n1 < 0:
        raise ValueError(f"invalid family parameters n={n} k={k} s={s}")
    return s, n1, t


def family_q_matrix(n: int, k: int, s: int) -> np.ndarray:
    """Signless Laplacian of the extremal family, built directly (no order cap).

    Needed because the lemma grids run past the 64-vertex graph type.
    """
    s_, n1, t = _family_class_sizes(n, k, s)
    A = np.zeros((n, n), dtype=np.int64)
    A[:s_ + n1, :s_ + n1] = 1            # dominating u inner is a clique
    A[:s_, s_ + n1:] = 1                 # dominating joins the independents
    A[s_ + n1:, :s_] = 1
    np.fill_diagonal(A, 0)
    return A + np.diag(A.sum(axis=1))


def family_distance_matrix(n: int, k: int, s: int) -> np.ndarray:
    """Distance matrix of the extremal family, diameter 2, no order cap."""
    s_, n1, t = _family_class_sizes(n, k, s)
    D = np.full((n, n), 1, dtype=np.int64)
    D[s_:, s_ + n1:] = 2                 # inner/independent pairs sit at distance 2
    D[s_ + n1:, s_:] = 2
    np.fill_diagonal(D, 0)
    return D


# ---------------------------------------------------------------------------
# largest eigenvalue
# ---------------------------------------------------------------------------

def largest_eigenvalue(M, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER) -> float:
    """Largest eigenvalue of a symmetric nonnegative integer matrix.

    Shifted power iteration: the shift (max row sum) makes the target
    eigenvalue dominant in modulus.  Start vector is all-ones plus a small
    index-dependent perturbation; convergence is declared when the
    infinity-norm residual drops below tol * max(1, lambda).
    """
    A = np.asarray(M, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("matrix must be square")
    if n == 0:
        raise ValueError("empty matrix")
    if n == 1:
        return float(A[0, 0])
    shift = float(np.abs(A).sum(axis=1).max())
    x = 1.0 + np.arange(n) * (1.0 / (8 * n))
    x /= np.linalg.norm(x)
    z = A @ x
    residual = math.inf
    for _ in range(max_iter):
        lam = float(x @ z)
        residual = float(np.max(np.abs(z - lam * x)))
        if residual <= tol * max(1.0, abs(lam)):
            return lam
        y = z + shift * x
        norm = float(np.linalg.norm(y))
        if norm == 0.0:
            return -shift  # zero spectrum edge case
        x = y / norm
        z = A @ x
    raise ConvergenceError(residual, max_iter)


# ---------------------------------------------------------------------------
# equitable partitions, quotient matrices, characteristic cubics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuotientMatrix:
    """Exact block-row-sum matrix with an equitability certificate."""
    entries: tuple[tuple[Fraction, ...], ...]
    equitable: bool

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    @property
    def size(self) -> int:
        return len(self.entries)


def quotient(M, blocks) -> QuotientMatrix:
    """Row-sum quotient of an integer matrix over an ordered vertex partition.

    equitable is True iff inside every block pair the row sums agree, in
    which case the quotient's spectrum interlaces and its largest
    eigenvalue equals the full matrix's.
    """
    A = np.asarray(M, dtype=np.int64)
    n = A.shape[0]
    cover = sorted(v for b in blocks for v in b)
    if cover != list(range(n)):
        raise ValueError("blocks must partition 0..n-1")
    if any(len(b) == 0 for b in blocks):
        raise ValueError("empty block")
    equitable = True
    rows = []
    for bi in blocks:
        row = []
        for bj in blocks:
            sums = A[np.ix_(list(bi), list(bj))].sum(axis=1)
            if not (sums == sums[0]).all():
                equitable = False
            row.append(Fraction(int(sums.sum()), len(bi)))
        rows.append(tuple(row))
    return QuotientMatrix(tuple(rows), equitable)


@dataclass(frozen=True)
class Cubic:
    """Monic cubic x^3 + c2 x^2 + c1 x + c0 with exact coefficients."""
    c2: Fraction
    c1: Fraction
    c0: Fraction

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (Fraction(1), self.c2, self.c1, self.c0)

    def __call__(self, x: float) -> float:
        return ((x + float(self.c2)) * x + float(self.c1)) * x + float(self.c0)


def charpoly3(q: QuotientMatrix) -> Cubic:
    """Characteristic polynomial of a 3x3 quotient, exact."""
    if q.size != 3:
        raise ValueError("charpoly3 needs a 3x3 quotient")
    b = q.entries
    tr = b[0][0] + b[1][1] + b[2][2]
    m01 = b[0][0] * b[1][1] - b[0][1] * b[1][0]
    m02 = b[0][0] * b[2][2] - b[0][2] * b[2][0]
    m12 = b[1][1] * b[2][2] - b[1][2] * b[2][1]
    det = (b[0][0] * m12
           - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0])
           + b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]))
    return Cubic(-tr, m01 + m02 + m12, -det)


def positional_blocks(p: ExtremalParams) -> tuple[range, range, range]:
    """The three vertex blocks of extremal_graph(p) in construction order."""
    s, n1 = p.s, p.inner_size
    return (range(0, s), range(s, s + n1), range(s + n1, p.n))


def positional_blocks_prime(p: ExtremalParams) -> tuple[range, range, range]:
    """Partition for the boundary order n = 2s-2k+1 (no inner clique):
    the independent block splits into s-2k vertices and one singleton."""
    if p.inner_size != 0:
        raise ValueError("prime partition only applies when the inner clique is empty")
    s = p.s
    return (range(0, s), range(s, p.n - 1), range(p.n - 1, p.n))


# closed forms --------------------------------------------------------------

FAMILIES = ("f2", "f_pi_1", "f_pi_prime_1", "f3_q",
            "phi_B1", "phi_B3_case1", "phi_B3_case2")


def _f_pi_1(n: int, k: int, s: int) -> Cubic:
    F = Fraction
    return Cubic(
        F(s - 3 * n - 4 * k + 6),
        F(-4 * s * s + (8 * k + n - 4) * s + 4 * k * n - 8 * n - 8 * k + 2 * n * n + 8),
        F(-2 * s ** 3 + (8 * k + 4 * n - 10) * s * s
          + (-8 * k * k - 8 * k * n + 20 * k - 2 * n * n + 10 * n - 12) * s))


def _phi_b1(n: int, k: int, s: int) -> Cubic:
    F = Fraction
    return Cubic(
        F(2 * k - n - s + 3),
        F(5 * s * s - 14 * k * s - 2 * n * s + 8 * k * k + 4 * k * n + 6 * s - 6 * k - 5 * n + 6),
        F(-2 * s ** 3 + 6 * k * s * s + n * s * s + 2 * s * s - 4 * k * k * s - 2 * k * n * s
          - 10 * k * s - n * s + 6 * s + 8 * k * k + 4 * k * n - 8 * k - 4 * n + 4))


def closed_form(family: str, *, n: int | None = None, k: int,
                s: int | None = None, delta: int | None = None) -> Cubic:
    """Characteristic cubic of the named family's quotient matrix.

    Parameters outside the family's validity region raise ValueError.
    Regions: f2 needs n >= 2k+2; f_pi_1 needs s >= 2k, n >= 2s-2k+2;
    f_pi_prime_1 lives at n = 2s-2k+1 with s >= 2k+1; f3_q and the
    distance families substitute delta with delta >= 2k+1; phi_B1 extends
    down to n = 2s-2k+1 where it still carries the right largest root;
    phi_B3_case2 lives at n = 2s-2k+1 with s >= delta+1.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    F = Fraction
    if family == "f2":
        if n is None or n < 2 * k + 2:
            raise ValueError("f2 needs n >= 2k+2")
        return Cubic(
            F(6 - 2 * k - 3 * n),
            F(6 * n * k - 16 * k + 2 * n * n - 8 * n + 8),
            F((-4 * n * n + 20 * n - 24) * k))
    if family == "f_pi_1":
        if n is None or s is None or s < 2 * k or n < 2 * s - 2 * k + 2:
            raise ValueError("f_pi_1 needs s >= 2k and n >= 2s-2k+2")
        return _f_pi_1(n, k, s)
    if family == "f_pi_prime_1":
        if s is None or s < 2 * k + 1:
            raise ValueError("f_pi_prime_1 needs s >= 2k+1 (order is 2s-2k+1)")
        return Cubic(
            F(2 * k - 5 * s + 1),
            F(6 * s * s - 2 * k * s - 3 * s),
            F(-2 * s ** 3 + 2 * s * s))
    if family == "f3_q":
        if n is None or delta is None or delta < 2 * k + 1 or n < 2 * delta - 2 * k + 2:
            raise ValueError("f3_q needs delta >= 2k+1 and n >= 2*delta-2k+2")
        return _f_pi_1(n, k, delta)
    if family == "phi_B1":
        if n is None or s is None or s < 2 * k or n < 2 * s - 2 * k + 1:
            raise ValueError("phi_B1 needs s >= 2k and n >= 2s-2k+1")
        return _phi_b1(n, k, s)
    if family == "phi_B3_case1":
        if n is None or delta is None or delta < 2 * k + 1 or n < 2 * delta - 2 * k + 2:
            raise ValueError("phi_B3_case1 needs delta >= 2k+1 and n >= 2*delta-2k+2")
        return _phi_b1(n, k, delta)
    if family == "phi_B3_case2":
        if s is None or delta is None or delta < 2 * k + 1 or s < delta + 1:
            raise ValueError("phi_B3_case2 needs delta >= 2k+1 and s >= delta+1")
        d = delta
        return Cubic(
            F(4 * k - d - 2 * s + 2),
            F(4 * d + 8 * k - 10 * s - 10 * d * k - 4 * d * s + 8 * k * s + 5 * d * d + 1),
            F(5 * d + 4 * k - 8 * s - 10 * d * k - 2 * d * s + 8 * k * s + 4 * d * d * k
              + 2 * d * d * s + 3 * d * d - 2 * d ** 3 - 4 * d * k * s))
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")


def largest_real_root(c: Cubic, tol: float = 1e-13) -> float:
    """Largest real root of a monic cubic by bracketing bisection.

    The Cauchy bound 1 + max|coeff| brackets all roots; the derivative's
    critical points isolate the rightmost one.
    """
    c2, c1, c0 = float(c.c2), float(c.c1), float(c.c0)
    bound = 1.0 + max(abs(c2), abs(c1), abs(c0))

    def p(x: float) -> float:
        return ((x + c2) * x + c1) * x + c0

    disc = c2 * c2 - 3.0 * c1
    lo, hi = -bound, bound
    if disc > 0.0:
        r = math.sqrt(disc)
        x_hi = (-c2 + r) / 3.0   # rightmost critical point (local min)
        x_lo = (-c2 - r) / 3.0
        if p(x_hi) <= 0.0:
            lo = x_hi
        else:
            hi = x_lo   # single real root left of the local max
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if p(mid) >= 0.0:
            hi = mid
        else:
            lo = mid
        if hi - lo <= tol * max(1.0, abs(hi)):
            break
    # bisection keeps p(hi) >= 0; an exact zero there is the root itself
    return hi if p(hi) == 0.0 else 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# per-graph spectral summary
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpectralReport:
    n: int
    e: int
    min_degree: int
    connected: bool
    adjacency_radius: float
    q_radius: float
    distance_radius: float | None
    wiener: int | None


def spectral_report(g: Graph, tol: float = DEFAULT_TOL) -> SpectralReport:
    """Numeric spectral summary; distance data is None when disconnected."""
    conn = is_connected(g)
    rho = largest_eigenvalue(adjacency_matrix(g), tol) if g.n else 0.0
    q = largest_eigenvalue(signless_laplacian(g), tol) if g.n else 0.0
    mu = None
    wien = None
    if conn and g.n:
        mu = largest_eigenvalue(distance_matrix_array(g), tol)
        wien = wiener_index(g)
    degs = [g.degree(v) for v in range(g.n)]
    return SpectralReport(g.n, g.edge_count(), min(degs, default=0), conn, rho, q, mu, wien)


def wiener_g3(n: int, k: int, delta: int) -> int:
    """Closed-form Wiener index of the minimum-degree family member."""
    t = delta - 2 * k + 1
    c = n - delta + 2 * k - 1
    w = c * (c - 1) // 2 + 2 * (t * (t - 1) // 2) + delta * t + 2 * (n - 2 * delta + 2 * k - 1) * t
    return w
