"""Minimum isometric-universal graphs for pairs of trees and forests."""

from .assignment import Matching, WeightedBipartite, max_weight_max_matching
from .embed import Embedding, find_embedding, is_universal, parse_k, verify_embedding
from .errors import BudgetExceeded, InputError
from .forest import pairwise_weights, solve, solve_two_forests
from .graph import (
    INF,
    Graph,
    all_pairs_distances,
    bfs_distances,
    components,
    disjoint_union,
    is_forest,
    is_tree,
    parse_graph,
)
from .greedy import best_case_greedy, greedy_fold
from .oracle import enumerate_hosts, min_universal_bruteforce, min_universal_overlay
from .solution import UniversalSolution
from .supertree import max_common_subtree, min_supertree

__version__ = "0.1.0"
