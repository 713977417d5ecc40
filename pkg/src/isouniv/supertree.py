"""Minimum supertree of two trees via a maximum common subtree.

Inside a tree, subgraph containment of a tree is automatically isometric
(paths are unique), so a smallest tree containing both inputs is obtained
by gluing them along a largest common subtree.  Its size is
``|T1| + |T2| - overlap``.

The overlap is computed by a rooted dynamic program.  For a vertex ``a`` of
``T1`` entered from ``pa`` and a vertex ``b`` of ``T2`` entered from ``pb``,
the best rooted overlap is one plus a maximum-weight matching between the
child branches of ``a`` and of ``b``, each pair weighted by its own rooted
overlap.  Rooted states are directed edges (plus one unrooted state per
vertex), processed in order of increasing branch size.
"""

from __future__ import annotations

from dataclasses import dataclass

from .assignment import max_weight_max_matching
from .embed import Embedding
from .errors import InputError
from .graph import INF, Graph, is_tree
from .solution import UniversalSolution


@dataclass(frozen=True)
class CommonSubtree:
    """A largest common subtree, as aligned vertex pairs ``(v1, v2)``."""

    size: int
    pairs: tuple[tuple[int, int], ...]
    roots: tuple[int, int]


class _RootedStates:
    """Rooted views ``(v, parent)`` of one tree; ``parent = -1`` is unrooted."""

    def __init__(self, t: Graph):
        n = t.n
        self.vertex: list[int] = []
        self.children: list[list[int]] = []
        self.size: list[int] = []
        ids: dict[tuple[int, int], int] = {}
        for a in range(n):
            for pa in (-1,) + t.adj[a]:
                ids[(a, pa)] = len(self.vertex)
                self.vertex.append(a)
        for a in range(n):
            for pa in (-1,) + t.adj[a]:
                self.children.append([ids[(c, a)] for c in t.adj[a] if c != pa])

        # Branch sizes from one rooting at vertex 0.
        sub = [1] * n
        par = [-1] * n
        order = [0]
        seen = [False] * n
        seen[0] = True
        for u in order:
            for w in t.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    par[w] = u
                    order.append(w)
        for u in reversed(order):
            if par[u] >= 0:
                sub[par[u]] += sub[u]
        self.size = [0] * len(self.vertex)
        for (a, pa), i in ids.items():
            if pa == -1:
                self.size[i] = n
            elif par[a] == pa:
                self.size[i] = sub[a]
            else:
                self.size[i] = n - sub[pa]
        self.root = [ids[(a, -1)] for a in range(n)]
        self.edge_states = sorted(
            (i for (a, pa), i in ids.items() if pa != -1), key=lambda i: (self.size[i], i)
        )


def _check_tree(t: Graph, name: str) -> None:
    if not is_tree(t):
        raise InputError(f"{name} is not a tree")


def _solve_pair(s1: _RootedStates, s2: _RootedStates, i: int, j: int, table: dict) -> None:
    ch1, ch2 = s1.children[i], s2.children[j]
    if not ch1 or not ch2:
        table[(i, j)] = (1, ())
        return
    w = [[table[(c1, c2)][0] for c2 in ch2] for c1 in ch1]
    if len(ch1) <= len(ch2):
        m = max_weight_max_matching(w)
        chosen = tuple((ch1[a], ch2[b]) for a, b in m.pairs)
    else:
        m = max_weight_max_matching([list(col) for col in zip(*w)])
        chosen = tuple((ch1[a], ch2[b]) for b, a in m.pairs)
    table[(i, j)] = (1 + m.weight, chosen)


def max_common_subtree(t1: Graph, t2: Graph) -> CommonSubtree:
    """Largest tree that is a subgraph of both ``t1`` and ``t2``, with alignment."""
    _check_tree(t1, "first input")
    _check_tree(t2, "second input")
    s1, s2 = _RootedStates(t1), _RootedStates(t2)
    table: dict[tuple[int, int], tuple[int, tuple]] = {}
    for i in s1.edge_states:
        for j in s2.edge_states:
            _solve_pair(s1, s2, i, j, table)

    best = None
    for a in range(t1.n):
        for b in range(t2.n):
            i, j = s1.root[a], s2.root[b]
            _solve_pair(s1, s2, i, j, table)
            if best is None or table[(i, j)][0] > best[0]:
                best = (table[(i, j)][0], a, b)
    size, ra, rb = best

    pairs = []
    stack = [(s1.root[ra], s2.root[rb])]
    while stack:
        i, j = stack.pop()
        pairs.append((s1.vertex[i], s2.vertex[j]))
        stack.extend(table[(i, j)][1])
    pairs.sort()
    assert len(pairs) == size
    return CommonSubtree(size, tuple(pairs), (ra, rb))


def glue(t1: Graph, t2: Graph, pairs) -> tuple[Graph, Embedding, Embedding]:
    """Union of ``t1`` and ``t2`` with aligned vertices identified.

    ``t1`` keeps its numbering; unaligned vertices of ``t2`` follow in index order.
    """
    to_host = dict((v2, v1) for v1, v2 in pairs)
    nxt = t1.n
    for v in range(t2.n):
        if v not in to_host:
            to_host[v] = nxt
            nxt += 1
    map2 = tuple(to_host[v] for v in range(t2.n))
    edges = set(t1.edges)
    for u, v in t2.edges:
        a, b = map2[u], map2[v]
        edges.add((a, b) if a < b else (b, a))
    host = Graph(nxt, edges)
    return host, Embedding(tuple(range(t1.n)), INF), Embedding(map2, INF)


def min_supertree(t1: Graph, t2: Graph) -> UniversalSolution:
    """Minimum isometric-universal tree for two trees."""
    common = max_common_subtree(t1, t2)
    host, e1, e2 = glue(t1, t2, common.pairs)
    assert host.n == t1.n + t2.n - common.size
    assert is_tree(host)
    return UniversalSolution(host, (e1, e2), "supertree", INF, {"overlap": common.size})
