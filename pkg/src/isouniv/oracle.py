"""Exhaustive ground truth for small families.

Hosts are enumerated one per isomorphism class, smallest vertex count first,
and each is tested with the embedding engine.  The first universal host is
a minimum one.  Hosts are never restricted to forests, even for forest
families: the solvers' optimality claims are what the oracle checks.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterator, Optional, Sequence

import numpy as np

from .embed import Embedding, find_embedding, parse_k
from .errors import InputError
from .graph import INF, Graph, all_pairs_distances, empty_graph
from .solution import UniversalSolution

ENUMERATION_CEILING = 8


# ---------------------------------------------------------------------------
# Canonical forms by individualization-refinement.

def _refine(adj: Sequence[Sequence[int]], colors: list[int]) -> list[int]:
    """Coarsest equitable refinement of ``colors``; colors are dense ranks."""
    count = len(set(colors))
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        colors = [rank[s] for s in sig]
        if len(rank) == count:
            return colors
        count = len(rank)


def _code(adj: Sequence[Sequence[int]], pos: Sequence[int]) -> int:
    """Upper-triangle adjacency bits in row-major order, first pair most significant."""
    n = len(adj)
    total = n * (n - 1) // 2
    code = 0
    for u in range(n):
        pu = pos[u]
        for w in adj[u]:
            pw = pos[w]
            if pu < pw:
                idx = pu * n - pu * (pu + 1) // 2 + (pw - pu - 1)
                code |= 1 << (total - 1 - idx)
    return code


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Isomorphism-invariant code and a labeling ``v -> position`` realizing it.

    Two graphs on the same vertex count are isomorphic iff their codes agree.
    The code is the minimum adjacency bit string over all leaves of the
    individualization-refinement tree.  Branches on twin vertices are pruned
    (swapping twins is an automorphism, so their subtrees are identical).
    """
    adj = g.adj
    n = g.n
    if n == 0:
        return 0, ()
    nbsets = [frozenset(a) for a in adj]
    best: list = [None, None]

    def visit(colors: list[int]) -> None:
        colors = _refine(adj, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            code = _code(adj, colors)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, tuple(colors)
            return
        tried: list[int] = []
        for v in target:
            if any(
                nbsets[v] - {u} == nbsets[u] - {v} for u in tried
            ):
                continue
            tried.append(v)
            keyed = [(colors[u], 0 if u == v else 1) for u in range(n)]
            rank = {s: i for i, s in enumerate(sorted(set(keyed)))}
            visit([rank[s] for s in keyed])

    visit([0] * n)
    return best[0], best[1]


def canonical_graph(g: Graph) -> Graph:
    _, pos = canonical_form(g)
    return g.relabel(pos)


# ---------------------------------------------------------------------------
# Host enumeration.

@lru_cache(maxsize=None)
def _classes(t: int) -> tuple[Graph, ...]:
    if t == 0:
        return (empty_graph(0),)
    seen: dict[int, Graph] = {}
    for base in _classes(t - 1):
        new = t - 1
        for mask in range(1 << new):
            extra = [(v, new) for v in range(new) if mask >> v & 1]
            g = Graph(t, list(base.edges) + extra)
            code, pos = canonical_form(g)
            if code not in seen:
                seen[code] = g.relabel(pos)
    ordered = sorted(seen.items(), key=lambda item: (item[1].m, item[0]))
    return tuple(g for _, g in ordered)


def enumerate_hosts(t: int) -> Iterator[Graph]:
    """One graph per isomorphism class on ``t`` vertices.

    Ordered by edge count, then by canonical code.  Refuses ``t`` above the
    enumeration ceiling.
    """
    if not 0 <= t <= ENUMERATION_CEILING:
        raise InputError(f"host enumeration limited to 0..{ENUMERATION_CEILING} vertices")
    return iter(_classes(t))


# ---------------------------------------------------------------------------
# Brute-force minimum.

@lru_cache(maxsize=None)
def _profile(g: Graph) -> tuple[tuple[int, ...], Counter]:
    degs = tuple(sorted(g.degrees, reverse=True))
    d = g.dist
    hist: Counter = Counter()
    for i in range(g.n):
        for j in range(i + 1, g.n):
            hist[d[i, j]] += 1
    return degs, hist


def _may_contain(pattern: Graph, host: Graph, k) -> bool:
    """Cheap necessary conditions for a ``k``-isometric embedding."""
    if pattern.n > host.n or pattern.m > host.m:
        return False
    pdeg, phist = _profile(pattern)
    hdeg, hhist = _profile(host)
    if any(a > b for a, b in zip(pdeg, hdeg)):
        return False
    # Pattern pairs at distance d <= max(k, 1) map to distinct host pairs at distance d.
    limit = max(k, 1)
    for d, cnt in phist.items():
        if d <= limit and hhist.get(d, 0) < cnt:
            return False
    return True


def universal_hosts(
    family: Sequence[Graph], k, t: int, budget: Optional[int] = None
) -> Iterator[UniversalSolution]:
    """All ``t``-vertex hosts (one per class) universal for ``family``."""
    k = parse_k(k)
    for host in enumerate_hosts(t):
        if not all(_may_contain(g, host, k) for g in family):
            continue
        embs = []
        for g in family:
            e = find_embedding(g, host, k, budget)
            if e is None:
                break
            embs.append(e)
        else:
            yield UniversalSolution(host, tuple(embs), "oracle", k)


def min_universal_bruteforce(
    family: Sequence[Graph],
    k=INF,
    max_vertices: int = ENUMERATION_CEILING,
    budget: Optional[int] = None,
) -> Optional[UniversalSolution]:
    """Smallest ``k``-universal host with at most ``max_vertices`` vertices.

    ``None`` means no host up to ``max_vertices`` exists; the true minimum
    then lies above the ceiling.
    """
    k = parse_k(k)
    if max_vertices > ENUMERATION_CEILING:
        raise InputError(f"oracle ceiling is {ENUMERATION_CEILING} vertices")
    if not family or any(g.n == 0 for g in family):
        raise InputError("oracle needs a nonempty family of nonempty graphs")
    start = max(g.n for g in family)
    for t in range(start, max_vertices + 1):
        for sol in universal_hosts(family, k, t, budget):
            return sol
    return None


# ---------------------------------------------------------------------------
# Exact minimum for a pair by overlaying the two graphs.
#
# Any universal host for {g, h} contains the union of the two images, and that
# union is itself universal.  So the minimum is |g| + |h| minus the largest
# vertex identification between g and h whose union keeps both graphs
# k-isometric.  This needs no host enumeration and has no vertex ceiling.

def _overlay(g: Graph, h: Graph, match: Sequence[int]) -> tuple[Graph, tuple[int, ...]]:
    """Union of ``g`` and ``h`` where ``h`` vertex ``match[u]`` is glued onto ``u``."""
    into = [-1] * h.n
    for u, x in enumerate(match):
        if x >= 0:
            into[x] = u
    nxt = g.n
    for x in range(h.n):
        if into[x] < 0:
            into[x] = nxt
            nxt += 1
    edges = list(g.edges) + [(into[a], into[b]) for a, b in h.edges]
    return Graph(nxt, edges), tuple(into)


def _isometric_at(pattern_dist: np.ndarray, host_dist: np.ndarray, k) -> bool:
    return bool(np.all((host_dist > k) | (host_dist == pattern_dist)))


def min_universal_overlay(g: Graph, h: Graph, k=INF) -> UniversalSolution:
    """Minimum ``k``-universal graph for the pair ``{g, h}``, over all graphs.

    Branch and bound over partial injections from ``g`` into ``h``.  Glued
    pairs must agree on distance whenever either distance is at most ``k``;
    every complete candidate is then checked on the actual union.
    """
    k = parse_k(k)
    n1, n2 = g.n, h.n
    dg, dh = g.dist, h.dist
    dgl, dhl = dg.tolist(), dh.tolist()
    match = [-1] * n1
    used = [False] * n2
    glued: list[int] = []
    best: dict = {"overlap": -1, "match": None}

    def compatible(u: int, x: int) -> bool:
        for v in glued:
            a, b = dgl[u][v], dhl[x][match[v]]
            if a != b and min(a, b) <= k:
                return False
        return True

    def evaluate() -> None:
        host, into = _overlay(g, h, match)
        du = all_pairs_distances(host)
        if not _isometric_at(dg, du[:n1, :n1], k):
            return
        idx = np.array(into, dtype=np.int64)
        if not _isometric_at(dh, du[np.ix_(idx, idx)], k):
            return
        best["overlap"] = len(glued)
        best["match"] = list(match)

    def search(u: int) -> None:
        if len(glued) + (n1 - u) <= best["overlap"]:
            return
        if u == n1:
            evaluate()
            return
        if len(glued) < n2:
            for x in range(n2):
                if not used[x] and compatible(u, x):
                    match[u] = x
                    used[x] = True
                    glued.append(u)
                    search(u + 1)
                    glued.pop()
                    used[x] = False
                    match[u] = -1
        search(u + 1)

    search(0)
    host, into = _overlay(g, h, best["match"])
    embs = (Embedding(tuple(range(n1)), k), Embedding(into, k))
    return UniversalSolution(host, embs, "oracle", k, {"overlap": best["overlap"]})
