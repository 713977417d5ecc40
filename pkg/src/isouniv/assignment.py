"""Maximum matching of maximum weight in a complete bipartite graph.

Because the bipartite graph is complete (every row may pair with every
column), a maximum matching saturates the smaller side.  The problem is the
rectangular assignment problem: pick one distinct column per row so that
the total weight is as large as possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InputError


@dataclass(frozen=True, init=False)
class WeightedBipartite:
    """``s x r`` integer weights, rows are the smaller side (``s <= r``)."""

    weights: tuple[tuple[int, ...], ...]

    def __init__(self, weights: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in weights)
        if rows and any(len(row) != len(rows[0]) for row in rows):
            raise InputError("weight matrix rows have different lengths")
        if any(x < 1 for row in rows for x in row):
            raise InputError("weights must be positive integers")
        object.__setattr__(self, "weights", rows)

    @property
    def s(self) -> int:
        return len(self.weights)

    @property
    def r(self) -> int:
        return len(self.weights[0]) if self.weights else 0

    def transpose(self) -> "WeightedBipartite":
        return WeightedBipartite(list(zip(*self.weights)) if self.weights else [])


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]
    weight: int


def max_weight_max_matching(b: WeightedBipartite | Sequence[Sequence[int]]) -> Matching:
    """Optimal rectangular assignment of every row to a distinct column.

    Shortest augmenting paths with row/column potentials, O(s^2 r).  Rows are
    inserted in increasing index order and ties in reduced cost resolve to
    the smallest column, which makes the result deterministic.

    Raises ``InputError`` when there are more rows than columns; callers
    orient the smaller side as rows.
    """
    if not isinstance(b, WeightedBipartite):
        b = WeightedBipartite(b)
    s, r = b.s, b.r
    if s > r:
        raise InputError(f"{s} rows exceed {r} columns; transpose first")
    if s == 0:
        return Matching((), 0)

    # Minimize negated weights; 1-based arrays with column 0 as the virtual root.
    cost = [[0] * (r + 1)] + [[0] + [-x for x in row] for row in b.weights]
    u = [0] * (s + 1)
    v = [0] * (r + 1)
    owner = [0] * (r + 1)  # owner[j]: row assigned to column j
    way = [0] * (r + 1)
    for i in range(1, s + 1):
        owner[0] = i
        j0 = 0
        minv = [None] * (r + 1)
        done = [False] * (r + 1)
        while True:
            done[j0] = True
            i0 = owner[j0]
            delta = None
            j1 = 0
            for j in range(1, r + 1):
                if done[j]:
                    continue
                cur = cost[i0][j] - u[i0] - v[j]
                if minv[j] is None or cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if delta is None or minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(r + 1):
                if done[j]:
                    u[owner[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if owner[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            owner[j0] = owner[j1]
            j0 = j1

    pairs = sorted((owner[j] - 1, j - 1) for j in range(1, r + 1) if owner[j])
    weight = sum(b.weights[i][j] for i, j in pairs)
    return Matching(tuple(pairs), weight)
