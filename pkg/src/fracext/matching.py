"""Matching machinery and the two fractional extendability oracles.

A fractional perfect matching (FPM) is a nonnegative edge weighting with
unit sum at every vertex; existence is decided combinatorially on the
bipartite double cover, and any witness assignment is half-integral
(weights in {0, 1/2, 1}).  A graph of order >= 2k+2 is fractional
k-extendable when every k-matching extends to an FPM that keeps its k
edges at weight 1.  The definitional oracle tests exactly that; the
set-condition oracle instead scans vertex subsets S whose induced
subgraph carries a k-matching and demands i(G-S) <= |S| - 2k.  Both
return Verdicts that carry re-checkable witnesses.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph

try:
    import numpy as _np
except ImportError:  # pragma: no cover - numpy is a hard dep, but keep the oracle honest
    _np = None

HALF = Fraction(1, 2)
ONE = Fraction(1)

# reason codes shared by both oracles
EXTENDABLE = "extendable"
TOO_SMALL = "too_small"             # order < 2k+2: outside the definition
NO_K_MATCHING = "no_k_matching"     # no k-matching to extend
BAD_MATCHING = "unextendable_matching"
BAD_SET = "violating_set"

SCAN_CAP = 1 << 26


class OracleCapacityError(ValueError):
    """Exhaustive enumeration would exceed the configured cap."""


@dataclass(frozen=True)
class Verdict:
    """Oracle answer plus a witness that can be re-verified independently.

    witness_set is a vertex bitmask (violating S); witness_matching is the
    k-matching that failed to extend.
    """
    answer: bool
    reason: str
    witness_set: int | None = None
    witness_matching: tuple[tuple[int, int], ...] | None = None


# ---------------------------------------------------------------------------
# maximum matching (blossom contraction)
# ---------------------------------------------------------------------------

def _blossom_augment(g: Graph, active: int, match: list[int], root: int) -> bool:
    # standard O(V^2) single-phase search with blossom contraction via bases
    n = g.n
    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n
    in_blossom = [False] * n
    q = deque([root])
    in_queue[root] = True

    def lca(a: int, b: int) -> int:
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int):
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while q:
        v = q.popleft()
        m = g.rows[v] & active
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            if base[v] == base[u] or match[v] == u:
                continue
            if u == root or (match[u] != -1 and parent[match[u]] != -1):
                # odd cycle: contract the blossom
                b = lca(v, u)
                for i in range(n):
                    in_blossom[i] = False
                mark_path(v, b, u)
                mark_path(u, b, v)
                for i in range(n):
                    if (active >> i) & 1 and in_blossom[base[i]]:
                        base[i] = b
                        if not in_queue[i]:
                            in_queue[i] = True
                            q.append(i)
            elif parent[u] == -1:
                parent[u] = v
                if match[u] == -1:
                    # augmenting path found: flip along parents
                    while u != -1:
                        pv = parent[u]
                        nxt = match[pv]
                        match[u] = pv
                        match[pv] = u
                        u = nxt
                    return True
                else:
                    w = match[u]
                    if not in_queue[w]:
                        in_queue[w] = True
                        q.append(w)
    return False


def matching_number(g: Graph, active_mask: int | None = None, stop_at: int | None = None) -> int:
    """Maximum matching size on the (optionally masked) vertex set.

    stop_at allows early exit once that many edges are guaranteed.
    """
    active = (1 << g.n) - 1 if active_mask is None else active_mask
    match = [-1] * g.n
    size = 0
    # greedy warm start
    m = active
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        if match[v] == -1:
            cand = g.rows[v] & active
            while cand:
                lu = cand & -cand
                u = lu.bit_length() - 1
                cand ^= lu
                if match[u] == -1:
                    match[u] = v
                    match[v] = u
                    size += 1
                    break
    if stop_at is not None and size >= stop_at:
        return size
    m = active
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        if match[v] == -1 and _blossom_augment(g, active, match, v):
            size += 1
            if stop_at is not None and size >= stop_at:
                return size
    return size


def _has_k_matching_in_mask(g: Graph, mask: int, k: int) -> bool:
    if k <= 0:
        return True
    if mask.bit_count() < 2 * k:
        return False
    if k == 1:
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if g.rows[v] & mask & ~((low << 1) - 1):
                return True
        return False
    if k == 2:
        m = mask
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            cand = g.rows[u] & mask & ~((low << 1) - 1)
            while cand:
                lv = cand & -cand
                v = lv.bit_length() - 1
                cand ^= lv
                rest = mask & ~(1 << u) & ~(1 << v)
                if _has_k_matching_in_mask(g, rest, 1):
                    return True
        return False
    return matching_number(g, mask, stop_at=k) >= k


def has_k_matching(g: Graph, k: int) -> bool:
    """Does g contain k pairwise disjoint edges?"""
    return _has_k_matching_in_mask(g, (1 << g.n) - 1, k)


# ---------------------------------------------------------------------------
# fractional perfect matchings via the bipartite double cover
# ---------------------------------------------------------------------------

def _double_cover_matching(g: Graph, mask: int) -> tuple[list[int], int]:
    """Hopcroft-Karp on the double cover restricted to mask.

    Left copies are the vertices themselves, right copies their mirrors;
    u-left is adjacent to v-right iff uv is an edge.  Returns (match_l,
    deficiency-certificate mask of alternating-reachable left vertices);
    the certificate mask is 0 when the matching is perfect.
    """
    n = g.n
    INF = n + 1
    match_l = [-1] * n
    match_r = [-1] * n
    verts = [v for v in range(n) if (mask >> v) & 1]
    # greedy init
    for v in verts:
        cand = g.rows[v] & mask
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            if match_r[u] == -1:
                match_l[v] = u
                match_r[u] = v
                break
    dist = [INF] * n
    while True:
        q = deque()
        for v in verts:
            if match_l[v] == -1:
                dist[v] = 0
                q.append(v)
            else:
                dist[v] = INF
        found = False
        while q:
            v = q.popleft()
            cand = g.rows[v] & mask
            while cand:
                low = cand & -cand
                u = low.bit_length() - 1
                cand ^= low
                w = match_r[u]
                if w == -1:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[v] + 1
                    q.append(w)
        if not found:
            break

        def try_augment(v: int) -> bool:
            cand = g.rows[v] & mask
            while cand:
                low = cand & -cand
                u = low.bit_length() - 1
                cand ^= low
                w = match_r[u]
                if w == -1 or (dist[w] == dist[v] + 1 and try_augment(w)):
                    match_l[v] = u
                    match_r[u] = v
                    return True
            dist[v] = INF
            return False

        for v in verts:
            if match_l[v] == -1:
                try_augment(v)
    if all(match_l[v] != -1 for v in verts):
        return match_l, 0
    # final BFS layer marks exactly the alternating-reachable left vertices
    reach = 0
    for v in verts:
        if dist[v] != INF:
            reach |= 1 << v
    return match_l, reach


def _deficiency_witness(g: Graph, mask: int, reach: int) -> int:
    """Turn the reachable-left set into a set S with i(G-S) > |S|."""
    a = reach
    while True:
        s = 0
        m = a
        while m:
            low = m & -m
            s |= g.rows[low.bit_length() - 1] & mask
            m ^= low
        if a & s:
            a &= ~s
        else:
            break
    iso = sum(1 for v in range(g.n)
              if (mask >> v) & 1 and not (s >> v) & 1 and g.rows[v] & mask & ~s == 0)
    if iso > s.bit_count():
        return s
    # fall back to an ascending scan; only reachable for tiny orders
    if g.n > 26:
        raise OracleCapacityError("witness extraction failed and order too large to scan")
    for cand in range(1 << g.n):
        if cand & ~mask:
            continue
        iso = sum(1 for v in range(g.n)
                  if (mask >> v) & 1 and not (cand >> v) & 1 and g.rows[v] & mask & ~cand == 0)
        if iso > cand.bit_count():
            return cand
    raise AssertionError("deficient double cover but no violating set")


def _half_integral_from_permutation(match_l: list[int], mask: int) -> dict[tuple[int, int], Fraction]:
    """Decompose the double-cover matching into weight-1 pairs and 1/2 cycles."""
    h: dict[tuple[int, int], Fraction] = {}
    seen = 0
    v0 = mask
    while v0:
        low = v0 & -v0
        start = low.bit_length() - 1
        v0 ^= low
        if (seen >> start) & 1:
            continue
        cyc = [start]
        seen |= 1 << start
        v = match_l[start]
        while v != start:
            cyc.append(v)
            seen |= 1 << v
            v = match_l[v]
        if len(cyc) == 2:
            a, b = cyc
            h[(min(a, b), max(a, b))] = ONE
        else:
            for i, a in enumerate(cyc):
                b = cyc[(i + 1) % len(cyc)]
                h[(min(a, b), max(a, b))] = HALF
    return h


def fractional_pm_exists(g: Graph, mask: int | None = None):
    """Decide FPM existence; returns (True, half-integral h) or (False, witness S).

    The witness S satisfies i(G-S) > |S| and certifies nonexistence.
    """
    active = (1 << g.n) - 1 if mask is None else mask
    if active == 0:
        return True, {}
    match_l, reach = _double_cover_matching(g, active)
    if reach == 0:
        return True, _half_integral_from_permutation(match_l, active)
    return False, _deficiency_witness(g, active, reach)


def extend_matching(g: Graph, matching) -> dict[tuple[int, int], Fraction] | None:
    """Extend the given matching to an FPM with its edges pinned at weight 1.

    Returns the full half-integral assignment, or None when no extension
    exists.  Raises ValueError if the input is not a matching in g.
    """
    used = 0
    edges = []
    for u, v in matching:
        if not g.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge")
        bit = (1 << u) | (1 << v)
        if used & bit:
            raise ValueError("edges share a vertex: not a matching")
        used |= bit
        edges.append((min(u, v), max(u, v)))
    ok, rest = fractional_pm_exists(g, ((1 << g.n) - 1) ^ used)
    if not ok:
        return None
    h = {e: ONE for e in edges}
    h.update(rest)
    return h


# ---------------------------------------------------------------------------
# the two extendability oracles
# ---------------------------------------------------------------------------

def _enumerate_k_matchings(g: Graph, k: int, cap: int = 10 ** 6):
    """Yield every k-matching once, edges in increasing lexicographic order."""
    edge_list = g.edges()
    count = 0

    def rec(start: int, used: int, chosen: list[tuple[int, int]]):
        nonlocal count
        if len(chosen) == k:
            count += 1
            if count > cap:
                raise OracleCapacityError(f"more than {cap} {k}-matchings")
            yield tuple(chosen)
            return
        for i in range(start, len(edge_list)):
            u, v = edge_list[i]
            bit = (1 << u) | (1 << v)
            if used & bit:
                continue
            chosen.append((u, v))
            yield from rec(i + 1, used | bit, chosen)
            chosen.pop()

    yield from rec(0, 0, [])


def is_fext_definitional(g: Graph, k: int, cap: int = 10 ** 6) -> Verdict:
    """Fractional k-extendability straight from the definition.

    Every k-matching must extend; the first failing matching (in canonical
    edge order) is the witness.  FPM subproblems are memoized by the
    removed vertex set.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n < 2 * k + 2:
        return Verdict(False, TOO_SMALL)
    full = (1 << g.n) - 1
    memo: dict[int, bool] = {}
    found_any = False
    for m in _enumerate_k_matchings(g, k, cap):
        found_any = True
        used = 0
        for u, v in m:
            used |= (1 << u) | (1 << v)
        ok = memo.get(used)
        if ok is None:
            ok, _ = fractional_pm_exists(g, full ^ used)
            memo[used] = ok
        if not ok:
            return Verdict(False, BAD_MATCHING, witness_matching=m)
    if not found_any:
        return Verdict(False, NO_K_MATCHING)
    return Verdict(True, EXTENDABLE)


def _isolated_table(g: Graph, nbits: int):
    """i(G-S) for every mask S, vectorized; only for small orders."""
    size = 1 << nbits
    masks = _np.arange(size, dtype=_np.int64)
    iso = _np.zeros(size, dtype=_np.int16)
    for v in range(nbits):
        row = g.rows[v]
        iso += (((masks & row) == row) & (((masks >> v) & 1) == 0)).astype(_np.int16)
    return iso


def is_fext_lemma(g: Graph, k: int, scan_cap: int = SCAN_CAP) -> Verdict:
    """Fractional k-extendability via the set condition.

    Scans subsets S in ascending mask order: a violator is an S whose
    induced subgraph has a k-matching yet i(G-S) > |S| - 2k.  The first
    violator (lexicographically least) is returned as witness; absence of
    violators over the full scan certifies extendability.  Graphs without
    a k-matching, or of order < 2k+2, get distinct negative verdicts.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n < 2 * k + 2:
        return Verdict(False, TOO_SMALL)
    if not has_k_matching(g, k):
        return Verdict(False, NO_K_MATCHING)
    n = g.n
    if _np is not None and n <= 20:
        iso = _isolated_table(g, n)
        masks = _np.arange(1 << n, dtype=_np.int64)
        pc = _np.zeros(1 << n, dtype=_np.int16)
        step = 1
        while step < (1 << n):
            pc[step:2 * step] = pc[:step] + 1
            step *= 2
        cand = _np.nonzero(iso > pc - 2 * k)[0]
        for s in cand:
            s = int(s)
            if s.bit_count() >= 2 * k and _has_k_matching_in_mask(g, s, k):
                return Verdict(False, BAD_SET, witness_set=s)
        return Verdict(True, EXTENDABLE)
    # large-order path: ascending scan with early exit, capped
    limit = 1 << n
    upper = (n + 2 * k - 1) // 2  # |S| beyond this cannot violate
    for s in range(limit):
        if s >= scan_cap:
            raise OracleCapacityError(
                f"subset scan for order {n} exceeded {scan_cap} masks without a violator")
        size = s.bit_count()
        if size < 2 * k or size > upper:
            continue
        iso_cnt = 0
        need = size - 2 * k + 1
        for v in range(n):
            if not (s >> v) & 1 and g.rows[v] & ~s == 0:
                iso_cnt += 1
                if iso_cnt >= need:
                    break
        if iso_cnt >= need and _has_k_matching_in_mask(g, s, k):
            return Verdict(False, BAD_SET, witness_set=s)
    return Verdict(True, EXTENDABLE)


def verify_witness(g: Graph, k: int, verdict: Verdict) -> bool:
    """Independently re-check a negative witness."""
    if verdict.answer:
        return True
    if verdict.reason == TOO_SMALL:
        return g.n < 2 * k + 2
    if verdict.reason == NO_K_MATCHING:
        return not has_k_matching(g, k)
    if verdict.reason == BAD_SET:
        s = verdict.witness_set
        if s is None or not _has_k_matching_in_mask(g, s, k):
            return False
        iso = sum(1 for v in range(g.n) if not (s >> v) & 1 and g.rows[v] & ~s == 0)
        return iso > s.bit_count() - 2 * k
    if verdict.reason == BAD_MATCHING:
        m = verdict.witness_matching
        return m is not None and extend_matching(g, m) is None
    return False
