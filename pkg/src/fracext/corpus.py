"""Exhaustive small-graph corpora, one representative per isomorphism class.

Two augmentation axes: by vertex (all graphs / connected graphs of a given
order) and by edge (graphs on a fixed vertex set with few edges, which
enumerates dense sweeps through complements).  Deduplication uses a
canonical form: color refinement orders the vertex classes, then a pruned
DFS maximizes the packed upper-triangle bitstring.  Identical-row twins
collapse to a single branch, which keeps the families with large symmetric
blocks (cliques, independent sets) linear.
"""
from __future__ import annotations

from .graphs import Graph, complement, empty_graph, is_connected

_ALL_CACHE: dict[int, tuple[Graph, ...]] = {}
_CONN_CACHE: dict[int, tuple[Graph, ...]] = {}


def _refinement_cells(g: Graph) -> list[list[int]]:
    """Color-refinement classes in an isomorphism-invariant order."""
    n = g.n
    colors = [g.degree(v) for v in range(n)]
    while True:
        sigs = []
        for v in range(n):
            m = g.rows[v]
            nb = []
            while m:
                low = m & -m
                nb.append(colors[low.bit_length() - 1])
                m ^= low
            sigs.append((colors[v], tuple(sorted(nb))))
        order = sorted(set(sigs))
        new = [order.index(s) for s in sigs]
        if new == colors:
            break
        colors = new
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_form(g: Graph) -> tuple[int, int]:
    """(order, packed upper-triangle bits) maximal over admissible labelings.

    Bit layout matches incremental placement: placing position p appends p
    bits, adjacency to earlier positions, earliest position most
    significant.
    """
    n = g.n
    if n <= 1:
        return (n, 0)
    cells = _refinement_cells(g)
    # cell membership in placement order: cell boundaries are fixed
    remaining = [list(c) for c in cells]
    placed: list[int] = []
    best_acc: int | None = None
    best_path: list[int] = [0] * (n + 1)
    path: list[int] = [0] * (n + 1)

    def dfs(p: int, acc: int):
        nonlocal best_acc
        if p == n:
            if best_acc is None or acc > best_acc:
                best_acc = acc
                best_path[:] = path
            return
        cell = next(c for c in remaining if c)
        chunk_of = []
        mx = -1
        for w in cell:
            ch = 0
            row = g.rows[w]
            for u in placed:
                ch = (ch << 1) | ((row >> u) & 1)
            chunk_of.append((w, ch))
            if ch > mx:
                mx = ch
        acc2 = (acc << p) | mx
        if best_acc is not None and acc2 < best_path[p + 1]:
            return
        path[p + 1] = acc2
        tried_rows = []
        for w, ch in chunk_of:
            # identical-row twins are interchangeable: explore one
            if ch != mx or g.rows[w] in tried_rows:
                continue
            tried_rows.append(g.rows[w])
            cell.remove(w)
            placed.append(w)
            dfs(p + 1, acc2)
            placed.pop()
            cell.append(w)

    dfs(0, 0)
    assert best_acc is not None
    return (n, best_acc)


def graph_from_canonical(form: tuple[int, int]) -> Graph:
    """Rebuild the representative graph from its canonical form."""
    n, bits = form
    rows = [0] * n
    pos = n * (n - 1) // 2 - 1
    for p in range(1, n):
        for i in range(p):
            if (bits >> pos) & 1:
                rows[i] |= 1 << p
                rows[p] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))


def all_graphs(n: int) -> tuple[Graph, ...]:
    """Every graph of order n up to isomorphism, canonically ordered."""
    if n < 0:
        raise ValueError("negative order")
    cached = _ALL_CACHE.get(n)
    if cached is not None:
        return cached
    if n == 0:
        out = (empty_graph(0),)
    elif n == 1:
        out = (empty_graph(1),)
    else:
        forms: set[tuple[int, int]] = set()
        for parent in all_graphs(n - 1):
            base_rows = list(parent.rows)
            for sub in range(1 << (n - 1)):
                rows = base_rows + [sub]
                rows2 = [r | (((sub >> v) & 1) << (n - 1)) for v, r in enumerate(rows[:-1])]
                g = Graph(n, tuple(rows2 + [sub]))
                forms.add(canonical_form(g))
        out = tuple(graph_from_canonical(f) for f in sorted(forms))
    _ALL_CACHE[n] = out
    return out


def connected_graphs(n: int) -> tuple[Graph, ...]:
    cached = _CONN_CACHE.get(n)
    if cached is None:
        cached = tuple(g for g in all_graphs(n) if is_connected(g))
        _CONN_CACHE[n] = cached
    return cached


def sparse_graphs(n: int, max_edges: int) -> tuple[Graph, ...]:
    """Graphs on n labeled-then-canonicalized vertices with <= max_edges
    edges, up to isomorphism; isolated vertices allowed."""
    current: dict[tuple[int, int], Graph] = {}
    e0 = empty_graph(n)
    current[canonical_form(e0)] = e0
    out = [e0]
    for _ in range(max_edges):
        nxt: dict[tuple[int, int], Graph] = {}
        for g in current.values():
            for u in range(n):
                for v in range(u + 1, n):
                    if g.has_edge(u, v):
                        continue
                    rows = list(g.rows)
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                    h = Graph(n, tuple(rows))
                    f = canonical_form(h)
                    if f not in nxt:
                        nxt[f] = graph_from_canonical(f)
        current = nxt
        out.extend(nxt[f] for f in sorted(nxt))
    return tuple(out)


def complement_corpus(n: int, complement_budget: int) -> tuple[Graph, ...]:
    """All graphs of order n whose complement has <= complement_budget edges.

    This is the natural exhaustive corpus for edge-count sweeps near the
    complete graph.
    """
    return tuple(complement(g) for g in sparse_graphs(n, complement_budget))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test via canonical forms (corpus-internal sizes)."""
    return g.n == h.n and canonical_form(g) == canonical_form(h)
