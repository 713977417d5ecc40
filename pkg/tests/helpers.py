"""Shared fixtures-as-functions and independent brute-force references."""

from __future__ import annotations

import random
from itertools import combinations, permutations

import numpy as np

from isouniv.embed import parse_k
from isouniv.graph import Graph, star_graph


def c4_two_pendants() -> Graph:
    # 4-cycle 0-1-3-2 with pendants 4, 5 on vertex 3.
    return Graph(6, [(0, 1), (1, 3), (3, 2), (2, 0), (3, 4), (3, 5)])


def k14() -> Graph:
    return star_graph(4)


def k13_plus() -> Graph:
    """K_{1,3} with one leaf extended by a pendant edge."""
    return Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform labeled tree via a Pruefer sequence."""
    if n <= 1:
        return Graph(n, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    edges.append((u, v))
    return Graph(n, edges)


def random_forest(rng: random.Random, n: int, max_components: int) -> Graph:
    parts = rng.randint(1, max(1, min(max_components, n))) if n else 0
    cuts = sorted(rng.sample(range(1, n), parts - 1)) if parts > 1 else []
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    edges, off = [], 0
    for size in sizes:
        t = random_tree(rng, size)
        edges.extend((u + off, v + off) for u, v in t.edges)
        off += size
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(n, [(perm[u], perm[v]) for u, v in edges])


def floyd_warshall(g: Graph) -> np.ndarray:
    """Reference distances, independent of the BFS code."""
    d = np.full((g.n, g.n), np.inf)
    np.fill_diagonal(d, 0)
    for u, v in g.edges:
        d[u, v] = d[v, u] = 1
    for w in range(g.n):
        d = np.minimum(d, d[:, [w]] + d[[w], :])
    return d


def brute_force_embeddable(pattern: Graph, host: Graph, k) -> bool:
    """Try every injection; vectorized over permutations."""
    k = parse_k(k)
    p, h = pattern.n, host.n
    if p == 0:
        return True
    if p > h:
        return False
    dh_full = floyd_warshall(host)
    dp = floyd_warshall(pattern)[None, :, :]
    maps = np.array(list(permutations(range(h), p)), dtype=np.int64)
    dh = dh_full[maps[:, :, None], maps[:, None, :]]
    ok = np.all((dp != 1) | (dh == 1), axis=(1, 2))
    ok &= np.all((dh > k) | (dh == dp), axis=(1, 2))
    return bool(ok.any())


def brute_force_assignment(w) -> int:
    """Best total weight over every injective row -> column assignment."""
    s, r = len(w), len(w[0])
    return max(sum(w[i][c] for i, c in enumerate(cols)) for cols in permutations(range(r), s))
