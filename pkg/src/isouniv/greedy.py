"""Greedy folding: merge family members one at a time with the exact pairwise solver."""

from __future__ import annotations

from itertools import permutations
from typing import Optional, Sequence

from .embed import Embedding, verify_embedding
from .errors import InputError
from .forest import solve_two_forests
from .graph import INF, Graph, is_forest
from .solution import UniversalSolution

MAX_BEST_CASE = 6


def greedy_fold(
    family: Sequence[Graph], order: Optional[Sequence[int]] = None, check_steps: bool = True
) -> UniversalSolution:
    """Fold ``family`` in ``order`` through ``solve_two_forests``.

    Embeddings of earlier members are carried along by composition.  The
    solution's ``meta["sizes"]`` lists the host size after every step.
    """
    if not family:
        raise InputError("empty family")
    order = list(range(len(family))) if order is None else [int(i) for i in order]
    if sorted(order) != list(range(len(family))):
        raise InputError(f"order {order} is not a permutation of 0..{len(family) - 1}")
    for i, g in enumerate(family):
        if not is_forest(g):
            raise InputError(f"family member {i} is not a forest")

    first = order[0]
    host = family[first]
    embs: dict[int, Embedding] = {first: Embedding(tuple(range(host.n)), INF)}
    sizes = [host.n]
    for idx in order[1:]:
        step = solve_two_forests(host, family[idx])
        if not is_forest(step.host):
            raise AssertionError("pairwise fold produced a non-forest")
        into_new = step.embeddings[0]
        embs = {i: e.compose(into_new) for i, e in embs.items()}
        embs[idx] = step.embeddings[1]
        host = step.host
        sizes.append(host.n)
        if check_steps:
            for i, e in embs.items():
                if not verify_embedding(family[i], host, e):
                    raise AssertionError(f"member {i} lost its embedding after folding {idx}")
    ordered = tuple(embs[i] for i in range(len(family)))
    return UniversalSolution(host, ordered, "greedy", INF, {"order": order, "sizes": sizes})


def best_case_greedy(family: Sequence[Graph]) -> tuple[int, list[int], UniversalSolution]:
    """Smallest greedy result over every fold order (ties: first order wins)."""
    if len(family) > MAX_BEST_CASE:
        raise InputError(f"best-case greedy enumerates orders for at most {MAX_BEST_CASE} graphs")
    best: Optional[UniversalSolution] = None
    best_order: list[int] = []
    for order in permutations(range(len(family))):
        sol = greedy_fold(family, order)
        if best is None or sol.size < best.size:
            best, best_order = sol, list(order)
    assert best is not None
    return best.size, best_order, best
