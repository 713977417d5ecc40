import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isouniv.errors import InputError
from isouniv.graph import INF, Graph, empty_graph, is_tree, path_graph, star_graph
from isouniv.oracle import (
    canonical_form,
    canonical_graph,
    enumerate_hosts,
    min_universal_bruteforce,
    min_universal_overlay,
    universal_hosts,
)
from isouniv.supertree import min_supertree

from helpers import k13_plus, k14, random_graph, random_tree


def _nx(g):
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges)
    return out


def labelled_class_count(t):
    """Dedup all 2^(t choose 2) labelled graphs with networkx isomorphism tests."""
    pairs = list(combinations(range(t), 2))
    buckets = {}
    for mask in range(1 << len(pairs)):
        g = nx.Graph()
        g.add_nodes_from(range(t))
        g.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
        key = (g.number_of_edges(), tuple(sorted(d for _, d in g.degree())))
        reps = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(g, r) for r in reps):
            reps.append(g)
    return sum(len(r) for r in buckets.values())


@pytest.mark.parametrize("t,count", [(0, 1), (1, 1), (2, 2), (3, 4)])
def test_small_class_counts(t, count):
    assert len(list(enumerate_hosts(t))) == count


@pytest.mark.parametrize("t", [4, 5, 6])
def test_class_counts_against_labelled_dedup(t):
    assert len(list(enumerate_hosts(t))) == labelled_class_count(t)


def test_class_count_seven():
    assert len(list(enumerate_hosts(7))) == 1044


def test_enumeration_order_and_distinctness():
    hosts = list(enumerate_hosts(5))
    ms = [g.m for g in hosts]
    assert ms == sorted(ms)
    for a, b in combinations(hosts, 2):
        assert not nx.is_isomorphic(_nx(a), _nx(b))
    assert hosts[0].m == 0 and hosts[-1].m == 10


def test_enumeration_refuses_above_ceiling():
    with pytest.raises(InputError):
        enumerate_hosts(9)


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=80, deadline=None)
@given(seeds, st.integers(0, 9), st.floats(0, 1))
def test_canonical_form_is_invariant(seed, n, p):
    rng = random.Random(seed)
    g = random_graph(rng, n, p)
    perm = list(range(n))
    rng.shuffle(perm)
    assert canonical_form(g)[0] == canonical_form(g.relabel(perm))[0]
    assert nx.is_isomorphic(_nx(g), _nx(canonical_graph(g)))


@settings(max_examples=80, deadline=None)
@given(seeds, st.integers(1, 7))
def test_canonical_form_separates(seed, n):
    rng = random.Random(seed)
    a, b = random_graph(rng, n, 0.5), random_graph(rng, n, 0.5)
    same = canonical_form(a)[0] == canonical_form(b)[0]
    assert same == nx.is_isomorphic(_nx(a), _nx(b))


def test_two_points():
    sol = min_universal_bruteforce([empty_graph(1), empty_graph(1)])
    assert sol.size == 1 and sol.method == "oracle"


def test_star_pair_minimum():
    fam = [k14(), k13_plus()]
    assert min_universal_bruteforce(fam, INF, max_vertices=5) is None
    sol = min_universal_bruteforce(fam, INF, max_vertices=6)
    assert sol.size == 6 and sol.verify(fam)


def test_path_and_claw():
    # Frozen from the brute force: nothing on 3 vertices, the claw itself on 4.
    sol = min_universal_bruteforce([path_graph(3), star_graph(3)])
    assert sol.size == 4
    assert nx.is_isomorphic(_nx(sol.host), _nx(star_graph(3)))


def test_oracle_input_errors():
    with pytest.raises(InputError):
        min_universal_bruteforce([path_graph(2)], max_vertices=9)
    with pytest.raises(InputError):
        min_universal_bruteforce([])
    with pytest.raises(InputError):
        min_universal_bruteforce([empty_graph(0)])


def test_tree_pairs_have_a_tree_minimum():
    rng = random.Random(8)
    for _ in range(25):
        a, b = random_tree(rng, rng.randint(1, 5)), random_tree(rng, rng.randint(1, 5))
        size = min_supertree(a, b).size
        hosts = list(universal_hosts([a, b], INF, size))
        assert hosts, "supertree size must be attainable"
        assert any(is_tree(s.host) and s.is_covering([a, b]) for s in hosts)
        assert min_universal_bruteforce([a, b]).size == size


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(1, 4), st.integers(1, 4))
def test_monotone_in_k_and_bounded(seed, n1, n2):
    rng = random.Random(seed)
    fam = [random_graph(rng, n1, 0.6), random_graph(rng, n2, 0.6)]
    sizes = [min_universal_bruteforce(fam, k).size for k in (0, 1, 2, INF)]
    assert sizes == sorted(sizes)
    assert sizes[-1] <= n1 + n2


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(1, 4), st.integers(1, 4), st.sampled_from([0, 1, 2, INF]))
def test_overlay_matches_enumeration(seed, n1, n2, k):
    rng = random.Random(seed)
    g, h = random_graph(rng, n1, rng.random()), random_graph(rng, n2, rng.random())
    over = min_universal_overlay(g, h, k)
    assert over.verify([g, h])
    assert over.size == min_universal_bruteforce([g, h], k).size


def test_overlay_star_pair():
    sol = min_universal_overlay(k14(), k13_plus())
    assert sol.size == 6 and sol.meta["overlap"] == 4
