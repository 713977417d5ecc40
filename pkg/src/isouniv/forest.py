"""Minimum isometric-universal graph for two forests.

Every component of an isometric host can hold at most one component of each
input (two components of one input must stay at infinite distance).  So an
optimal host pairs up components: each pair ``(G_i, H_j)`` is replaced by
its minimum supertree, saving ``w(i, j) = |G_i| + |H_j| - |S(G_i, H_j)|``
vertices, and the best pairing is a maximum-weight assignment.
"""

from __future__ import annotations

from dataclasses import dataclass

from .assignment import Matching, WeightedBipartite, max_weight_max_matching
from .embed import Embedding
from .errors import InputError
from .graph import INF, Graph, components, is_forest, is_tree
from .solution import UniversalSolution
from .supertree import min_supertree


@dataclass
class PairwiseWeights:
    """Weights and supertrees for every (row component, column component) pair.

    ``swapped`` records that the inputs were exchanged so rows are the side
    with fewer components.
    """

    bipartite: WeightedBipartite
    supertrees: list[list[UniversalSolution]]
    row_parts: list[tuple[int, ...]]
    col_parts: list[tuple[int, ...]]
    swapped: bool


def _check_forest(g: Graph, name: str) -> None:
    if not is_forest(g):
        raise InputError(f"{name} is not a forest")


def pairwise_weights(g: Graph, h: Graph) -> PairwiseWeights:
    _check_forest(g, "first input")
    _check_forest(h, "second input")
    cg, ch = components(g), components(h)
    swapped = len(cg) > len(ch)
    if swapped:
        g, h, cg, ch = h, g, ch, cg
    rows = [g.induced(part) for part in cg.sets]
    cols = [h.induced(part) for part in ch.sets]
    supertrees = [[min_supertree(a, b) for b in cols] for a in rows]
    weights = [
        [a.n + b.n - supertrees[i][j].size for j, b in enumerate(cols)]
        for i, a in enumerate(rows)
    ]
    return PairwiseWeights(
        WeightedBipartite(weights), supertrees, list(cg.sets), list(ch.sets), swapped
    )


def solve_two_forests(g: Graph, h: Graph) -> UniversalSolution:
    """Minimum isometric-universal forest for ``{g, h}``.

    The host lists the merged components first (in row order), then the
    unmatched column components in index order.
    """
    pw = pairwise_weights(g, h)
    matching: Matching = max_weight_max_matching(pw.bipartite)
    rg, rh = (h, g) if pw.swapped else (g, h)

    row_map = [0] * rg.n
    col_map = [0] * rh.n
    edges: list[tuple[int, int]] = []
    offset = 0
    matched_cols = set()
    for i, j in matching.pairs:
        st = pw.supertrees[i][j]
        for local, v in enumerate(pw.row_parts[i]):
            row_map[v] = offset + st.embeddings[0].map[local]
        for local, v in enumerate(pw.col_parts[j]):
            col_map[v] = offset + st.embeddings[1].map[local]
        edges.extend((offset + a, offset + b) for a, b in st.host.edges)
        offset += st.size
        matched_cols.add(j)
    for j, part in enumerate(pw.col_parts):
        if j in matched_cols:
            continue
        local_index = {v: t for t, v in enumerate(part)}
        for v in part:
            col_map[v] = offset + local_index[v]
        edges.extend(
            (offset + local_index[a], offset + local_index[b])
            for a, b in rh.edges
            if a in local_index
        )
        offset += len(part)

    host = Graph(offset, edges)
    er, ec = Embedding(tuple(row_map), INF), Embedding(tuple(col_map), INF)
    embeddings = (ec, er) if pw.swapped else (er, ec)
    assert host.n == g.n + h.n - matching.weight
    meta = {"matching_weight": matching.weight, "matching": [list(p) for p in matching.pairs]}
    return UniversalSolution(host, embeddings, "forest-pipeline", INF, meta)


def solve(g: Graph, h: Graph) -> UniversalSolution:
    """Dispatch: supertree for two trees, forest pipeline otherwise."""
    if is_tree(g) and is_tree(h):
        return min_supertree(g, h)
    return solve_two_forests(g, h)
