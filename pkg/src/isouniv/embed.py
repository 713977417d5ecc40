"""k-isometric subgraph containment: checking witnesses and searching for them.

A pattern ``P`` sits ``k``-isometrically in a host ``H`` under an injective
map ``f`` when every pattern edge lands on a host edge and, for every pair
``u, v`` of pattern vertices, ``d_H(f(u), f(v)) <= k`` implies
``d_P(u, v) == d_H(f(u), f(v))``.  ``k = 0`` is plain subgraph containment,
``k = 1`` induced containment, ``k = INF`` isometric containment (where
``INF`` pattern distances must stay ``INF`` in the host).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import BudgetExceeded, InputError
from .graph import INF, Graph

DEFAULT_BUDGET = 10**8


def default_budget() -> int:
    env = os.environ.get("ISOUNIV_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise InputError(f"ISOUNIV_BUDGET must be an integer, got {env!r}") from exc
    return DEFAULT_BUDGET


def parse_k(value) -> float | int:
    """Accept an int, ``math.inf`` or the strings ``"inf"``/``"infinity"``."""
    if isinstance(value, str):
        text = value.strip().lower()
        if text in ("inf", "infinity", "oo"):
            return INF
        try:
            value = int(text)
        except ValueError as exc:
            raise InputError(f"bad isometry parameter {value!r}") from exc
    if value == INF:
        return INF
    if isinstance(value, float) and value.is_integer():
        value = int(value)
    if not isinstance(value, int) or value < 0:
        raise InputError(f"isometry parameter must be a non-negative integer or inf, got {value!r}")
    return value


def format_k(k) -> int | str:
    return "inf" if k == INF else int(k)


@dataclass(frozen=True)
class Embedding:
    """Injective vertex map ``pattern -> host`` tagged with its isometry level."""

    map: tuple[int, ...]
    k: float | int = INF

    @property
    def pattern_n(self) -> int:
        return len(self.map)

    def to_json(self) -> dict:
        return {"k": format_k(self.k), "map": list(self.map)}

    @classmethod
    def from_json(cls, obj: dict) -> "Embedding":
        try:
            return cls(tuple(int(x) for x in obj["map"]), parse_k(obj["k"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed embedding record: {exc}") from exc

    def compose(self, outer: "Embedding") -> "Embedding":
        """``outer . self``: first map into an intermediate graph, then onward."""
        return Embedding(tuple(outer.map[v] for v in self.map), min(self.k, outer.k))


def verify_embedding(pattern: Graph, host: Graph, e: Embedding, k=None) -> bool:
    """True iff ``e`` is an injective, edge-preserving, ``k``-isometric map.

    ``k`` defaults to the level stored on the embedding.
    """
    k = e.k if k is None else parse_k(k)
    if e.pattern_n != pattern.n:
        raise InputError(f"embedding covers {e.pattern_n} vertices, pattern has {pattern.n}")
    if any(not (0 <= x < host.n) for x in e.map):
        raise InputError("embedding maps outside the host")
    if len(set(e.map)) != len(e.map):
        return False
    for u, v in pattern.edges:
        if not host.has_edge(e.map[u], e.map[v]):
            return False
    if pattern.n == 0:
        return True
    idx = np.asarray(e.map, dtype=np.int64)
    dh = host.dist[np.ix_(idx, idx)]
    dp = pattern.dist
    constrained = dh <= k
    return bool(np.all(dp[constrained] == dh[constrained]))


def _twin_predecessors(pattern: Graph, order: Sequence[int]) -> list[int]:
    """For each vertex, the previously placed member of its twin class, or -1.

    Twins (equal open or equal closed neighborhoods) are swapped by a pattern
    automorphism, so their images may be forced to increase along ``order``
    without losing any solution up to symmetry.
    """
    prev = [-1] * pattern.n
    last: dict = {}
    for v in order:
        nb = frozenset(pattern.adj[v])
        keys = [("open", nb), ("closed", nb | {v})]
        for key in keys:
            if key in last:
                prev[v] = last[key]
                break
        for key in keys:
            last[key] = v
    return prev


def _search_order(pattern: Graph) -> tuple[list[int], list[int]]:
    """BFS order anchored at a maximum-degree vertex of each component.

    Returns the order and, per position, the already-placed BFS parent
    (-1 for component roots).  Neighbors are queued by decreasing degree.
    """
    n = pattern.n
    deg = pattern.degrees
    seen = [False] * n
    order: list[int] = []
    parent: list[int] = []
    remaining = sorted(range(n), key=lambda v: (-deg[v], v))
    for root in remaining:
        if seen[root]:
            continue
        seen[root] = True
        order.append(root)
        parent.append(-1)
        head = len(order) - 1
        while head < len(order):
            u = order[head]
            head += 1
            for v in sorted(pattern.adj[u], key=lambda w: (-deg[w], w)):
                if not seen[v]:
                    seen[v] = True
                    order.append(v)
                    parent.append(u)
    return order, parent


def find_embedding(
    pattern: Graph, host: Graph, k=INF, budget: Optional[int] = None
) -> Optional[Embedding]:
    """Search for a ``k``-isometric embedding of ``pattern`` into ``host``.

    Returns the first embedding found (host candidates tried in increasing
    index order) or ``None`` if none exists.  Raises ``BudgetExceeded`` when
    more than ``budget`` partial placements were attempted.
    """
    k = parse_k(k)
    budget = default_budget() if budget is None else budget
    p, h = pattern.n, host.n
    if p == 0:
        return Embedding((), k)
    if p > h or pattern.m > host.m:
        return None

    dp = pattern.dist.tolist()
    dh = host.dist.tolist()
    hadj = host.adj
    pdeg, hdeg = pattern.degrees, host.degrees
    order, parent = _search_order(pattern)
    twin_prev = _twin_predecessors(pattern, order)
    all_hosts = list(range(h))

    image = [-1] * p
    used = [False] * h
    expansions = 0

    def candidates(pos: int) -> list[int]:
        u = order[pos]
        par = parent[pos]
        pool = hadj[image[par]] if par >= 0 else all_hosts
        lo = image[twin_prev[u]] if twin_prev[u] >= 0 else -1
        need = pdeg[u]
        return [x for x in pool if x > lo and not used[x] and hdeg[x] >= need]

    def consistent(pos: int, x: int) -> bool:
        u = order[pos]
        drow_p = dp[u]
        drow_h = dh[x]
        for j in range(pos):
            v = order[j]
            d_host = drow_h[image[v]]
            d_pat = drow_p[v]
            # Edges map to edges, so host distance never exceeds pattern distance.
            if d_host > d_pat:
                return False
            if d_host <= k and d_host != d_pat:
                return False
        return True

    stack = [iter(candidates(0))]
    pos = 0
    while stack:
        placed = False
        for x in stack[-1]:
            expansions += 1
            if expansions > budget:
                raise BudgetExceeded(budget)
            if consistent(pos, x):
                u = order[pos]
                image[u] = x
                used[x] = True
                placed = True
                break
        if not placed:
            stack.pop()
            pos -= 1
            if pos >= 0:
                u = order[pos]
                used[image[u]] = False
                image[u] = -1
            continue
        pos += 1
        if pos == p:
            return Embedding(tuple(image), k)
        stack.append(iter(candidates(pos)))
    return None


def is_universal(
    host: Graph, family: Sequence[Graph], k=INF, budget: Optional[int] = None
) -> Optional[list[Embedding]]:
    """One embedding per family member, or ``None`` if some member has none."""
    out = []
    for g in family:
        e = find_embedding(g, host, k, budget)
        if e is None:
            return None
        out.append(e)
    return out


__all__ = [
    "DEFAULT_BUDGET",
    "Embedding",
    "find_embedding",
    "format_k",
    "is_universal",
    "parse_k",
    "verify_embedding",
]
