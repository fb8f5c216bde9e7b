"""Bitmask graphs, basic statistics, and the three-block join families.

Vertices are 0..n-1; each adjacency row is an integer bitmask, so subset
work (induced subgraphs, isolated counts) is plain integer arithmetic.
Orders are capped at 128: enumeration corpora stay tiny, but the sharpness
grids need join-family graphs up to order 90.  The join family
K_s v (K_{n1} u t*K1) that witnesses sharpness of the extendability bounds
is built and recognized here.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

MAX_VERTICES = 128


class CapacityError(ValueError):
    """Order exceeds the supported bitmask representation."""


class Graph:
    """Immutable undirected graph; rows[v] is the neighbor bitmask of v."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: tuple[int, ...]):
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"order {n} outside 0..{MAX_VERTICES}")
        if len(rows) != n:
            raise ValueError("row count does not match order")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full or (row >> v) & 1:
                raise ValueError(f"bad adjacency row for vertex {v}")
        for v in range(n):
            for u in range(v):
                if ((rows[u] >> v) & 1) != ((rows[v] >> u) & 1):
                    raise ValueError(f"asymmetric pair ({u},{v})")
        self.n = n
        self.rows = tuple(rows)

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bad edge ({u},{v}) for order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            m = self.rows[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((r.bit_count() for r in self.rows), reverse=True))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count()})"


def empty_graph(m: int) -> Graph:
    return Graph(m, (0,) * m)


def complete(m: int) -> Graph:
    full = (1 << m) - 1
    return Graph(m, tuple(full ^ (1 << v) for v in range(m)))


def cycle(m: int) -> Graph:
    if m < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(m, [(v, (v + 1) % m) for v in range(m)])


def path(m: int) -> Graph:
    return Graph.from_edges(m, [(v, v + 1) for v in range(m - 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise CapacityError(f"union order {n} exceeds {MAX_VERTICES}")
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph(n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every cross edge."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise CapacityError(f"join order {n} exceeds {MAX_VERTICES}")
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = [r | hmask for r in g.rows] + [(r << g.n) | gmask for r in h.rows]
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ r ^ (1 << v)) for v, r in enumerate(g.rows)))


def induced(g: Graph, mask: int) -> Graph:
    """Induced subgraph on the bitmask's vertices, relabeled 0..m-1 in order."""
    keep = [v for v in range(g.n) if (mask >> v) & 1]
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        m = g.rows[v] & mask
        row = 0
        while m:
            low = m & -m
            row |= 1 << pos[low.bit_length() - 1]
            m ^= low
        rows.append(row)
    return Graph(len(keep), tuple(rows))


def delete_vertices(g: Graph, vertices) -> Graph:
    drop = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        drop |= 1 << v
    return induced(g, ((1 << g.n) - 1) ^ drop)


def isolated_count(g: Graph, removed_mask: int = 0) -> int:
    """Number of isolated vertices of g - removed_mask (degree 0 after removal)."""
    cnt = 0
    for v in range(g.n):
        if not (removed_mask >> v) & 1 and g.rows[v] & ~removed_mask == 0:
            cnt += 1
    return cnt


def connected_component_mask(g: Graph, start: int = 0) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= g.rows[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return connected_component_mask(g, 0) == (1 << g.n) - 1


@dataclass(frozen=True)
class GraphStats:
    n: int
    e: int
    min_degree: int
    connected: bool


def graph_stats(g: Graph) -> GraphStats:
    delta = min((g.degree(v) for v in range(g.n)), default=0)
    return GraphStats(g.n, g.edge_count(), delta, is_connected(g))


def distance_matrix(g: Graph) -> list[list[int]]:
    """All-pairs BFS distances; raises ValueError on a disconnected graph."""
    full = (1 << g.n) - 1
    D = []
    for src in range(g.n):
        dist = [0] * g.n
        seen = 1 << src
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= g.rows[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~seen
            seen |= frontier
            m = frontier
            while m:
                low = m & -m
                dist[low.bit_length() - 1] = d
                m ^= low
        if seen != full:
            raise ValueError("distance matrix requires a connected graph")
        D.append(dist)
    return D


def wiener_index(g: Graph) -> int:
    """Sum of distances over unordered pairs; connected graphs only."""
    D = distance_matrix(g)
    return sum(D[u][v] for u in range(g.n) for v in range(u + 1, g.n))


# ---------------------------------------------------------------------------
# the extremal three-block family
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtremalParams:
    """Parameters of K_s v (K_{n-2s+2k-1} u (s-2k+1)*K1).

    The first block is the dominating s-clique, the second the inner clique
    (possibly empty), the third an independent set of t = s-2k+1 vertices.
    s = 2k gives the edge/q equality graph, s = delta the min-degree one.
    """
    n: int
    k: int
    s: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.s < 2 * self.k:
            raise ValueError("s must be at least 2k")
        if self.inner_size < 0:
            raise ValueError("order too small: need n >= 2s-2k+1")

    @property
    def inner_size(self) -> int:
        return self.n - 2 * self.s + 2 * self.k - 1

    @property
    def independent_size(self) -> int:
        return self.s - 2 * self.k + 1


def extremal_graph(p: ExtremalParams) -> Graph:
    """Vertex order: dominating clique, inner clique, independent set."""
    inner = disjoint_union(complete(p.inner_size), empty_graph(p.independent_size))
    return join(complete(p.s), inner)


def extremal_edge_count(p: ExtremalParams) -> int:
    # dominating u inner is one clique of size n-s+2k-1, plus s*t cross edges
    c = p.n - p.s + 2 * p.k - 1
    return c * (c - 1) // 2 + p.s * p.independent_size


def _is_complete(g: Graph) -> bool:
    full = (1 << g.n) - 1
    return all(g.rows[v] == full ^ (1 << v) for v in range(g.n))


def matches_extremal(g: Graph, p: ExtremalParams) -> bool:
    """Is g isomorphic to extremal_graph(p)?

    Decided structurally from degree classes; every adjacency is verified,
    so no permutation search is needed.  Degenerate parameter sets collapse:
    inner_size <= 1 means the graph is K_s v m*K1 (and K_n when m would be 0).
    """
    if g.n != p.n:
        return False
    n, s, n1, t = p.n, p.s, p.inner_size, p.independent_size
    if n1 == 0 and t == 1:
        return _is_complete(g)
    if n1 <= 1:
        # K_s v (t + n1) K1: s universal vertices, the rest independent
        return _matches_split(g, s, n1 + t)
    degs = [g.degree(v) for v in range(n)]
    dom = [v for v in range(n) if degs[v] == n - 1]
    ind = [v for v in range(n) if degs[v] == s]
    inn = [v for v in range(n) if degs[v] == s + n1 - 1]
    if len(dom) != s or len(ind) != t or len(inn) != n1:
        return False
    dom_mask = 0
    for v in dom:
        dom_mask |= 1 << v
    for v in ind:
        if g.rows[v] != dom_mask:
            return False
    for u, v in itertools.combinations(inn, 2):
        if not g.has_edge(u, v):
            return False
    return True


def _matches_split(g: Graph, s: int, m: int) -> bool:
    # K_s v m*K1 with m >= 2, so universal and independent degrees differ
    n = g.n
    if s + m != n:
        return False
    dom = [v for v in range(n) if g.degree(v) == n - 1]
    if len(dom) != s:
        return False
    dom_mask = 0
    for v in dom:
        dom_mask |= 1 << v
    return all(g.rows[v] == dom_mask for v in range(n) if not (dom_mask >> v) & 1)


def embeds_in_extremal(g: Graph, k: int, s_mask: int) -> bool:
    """Certify g as a spanning subgraph of extremal_graph(n, k, |S|).

    S must be a violating set: g - S leaves at least |S|-2k+1 isolated
    vertices.  The embedding sends S to the dominating clique, t of the
    isolated vertices to the independent block, everything else inside the
    inner clique; edge containment is then checked explicitly.
    """
    n = g.n
    s = s_mask.bit_count()
    t = s - 2 * k + 1
    iso = [v for v in range(n) if not (s_mask >> v) & 1 and g.rows[v] & ~s_mask == 0]
    if len(iso) < t or t < 1:
        return False
    p = ExtremalParams(n, k, s)
    pattern = extremal_graph(p)
    order = ([v for v in range(n) if (s_mask >> v) & 1]
             + [v for v in range(n) if not (s_mask >> v) & 1 and v not in iso[:t]]
             + iso[:t])
    slot = {v: i for i, v in enumerate(order)}
    return all(pattern.has_edge(slot[u], slot[v]) for u, v in g.edges())
