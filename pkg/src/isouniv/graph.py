"""Undirected simple graphs on dense integer vertices, hop distances and
the small set of construction operators the solvers are built from.

Distances use ``INF`` (``math.inf``) for disconnected pairs.  Distance
matrices are float64 numpy arrays: hop counts are small integers, so they
are exact, and ``INF`` saturates under addition for free.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import InputError

INF = math.inf

# Above this many vertices, all-pairs distances go through scipy's csgraph.
_SCIPY_THRESHOLD = 128


@dataclass(frozen=True, init=False)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is normalized to a frozenset of ``(u, v)`` with ``u < v``.
    Isolated vertices are allowed (``n`` may exceed the touched vertices).
    """

    n: int
    edges: frozenset

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if not isinstance(n, (int, np.integer)) or n < 0:
            raise InputError(f"vertex count must be a non-negative integer, got {n!r}")
        norm = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", frozenset(norm))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuples, one per vertex."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    @cached_property
    def dist(self) -> np.ndarray:
        """Cached all-pairs distance matrix (read-only)."""
        d = all_pairs_distances(self)
        d.setflags(write=False)
        return d

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image of the graph under the vertex bijection ``v -> perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; vertex ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph(
            len(vertices),
            ((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Hop distances from ``source``; unreachable vertices get ``INF``."""
    if not 0 <= source < g.n:
        raise InputError(f"source {source} out of range for n={g.n}")
    row: list[float] = [INF] * g.n
    row[source] = 0
    adj = g.adj
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = row[u] + 1
        for v in adj[u]:
            if row[v] == INF:
                row[v] = du
                queue.append(v)
    return row


def all_pairs_distances(g: Graph) -> np.ndarray:
    """``n x n`` float matrix of hop distances, ``INF`` across components."""
    if g.n == 0:
        return np.zeros((0, 0))
    if g.n <= _SCIPY_THRESHOLD:
        return np.array([bfs_distances(g, s) for s in range(g.n)], dtype=float)
    rows, cols = zip(*g.edges) if g.edges else ((), ())
    a = csr_matrix(
        (np.ones(len(rows)), (np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64))),
        shape=(g.n, g.n),
    )
    return shortest_path(a, directed=False, unweighted=True)


@dataclass(frozen=True)
class ComponentDecomposition:
    """Connected components ordered by their smallest vertex."""

    sets: tuple[tuple[int, ...], ...]
    index: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.sets)


def components(g: Graph) -> ComponentDecomposition:
    index = [-1] * g.n
    sets: list[tuple[int, ...]] = []
    for s in range(g.n):
        if index[s] != -1:
            continue
        c = len(sets)
        index[s] = c
        members = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if index[v] == -1:
                    index[v] = c
                    members.append(v)
                    queue.append(v)
        sets.append(tuple(sorted(members)))
    return ComponentDecomposition(tuple(sets), tuple(index))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    off = a.n
    return Graph(a.n + b.n, list(a.edges) + [(u + off, v + off) for u, v in b.edges])


def is_forest(g: Graph) -> bool:
    # Union-find cycle detection; independent of the BFS component code.
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_forest(g)


# ---------------------------------------------------------------------------
# Named small graphs used throughout tests and examples.

def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def empty_graph(n: int) -> Graph:
    return Graph(n, ())


# ---------------------------------------------------------------------------
# Text formats.

def parse_graph(text: str) -> Graph:
    """Parse the ``graph <n> <m>`` edge-list format (``#`` comments allowed)."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise InputError("empty graph file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "graph":
        raise InputError(f"expected header 'graph <n> <m>', got {lines[0]!r}")
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError as exc:
        raise InputError(f"bad header {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) != m:
        raise InputError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"bad edge line {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise InputError(f"bad edge line {line!r}") from exc
    g = Graph(n, edges)
    if g.m != m:
        raise InputError("duplicate edges in graph file")
    return g


def format_graph(g: Graph) -> str:
    out = [f"graph {g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def to_dot(g: Graph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    out.extend(f"  {v};" for v in range(g.n))
    out.extend(f"  {u} -- {v};" for u, v in g.sorted_edges())
    out.append("}")
    return "\n".join(out) + "\n"
