"""Exact solvers for the Dominating Set Knapsack problem and its variants."""
from .decomposition import NiceTreeDecomposition, TreeDecomposition, heuristic_td, make_nice, parse_td
from .instance import (DskpInstance, Graph, Variant, is_dominating_set, is_minimal_dominating_set,
                       parse_instance, write_instance)
from .oracle import knapsack_01, min_vertex_cover, oracle_decide, oracle_min_dominating_set, oracle_pareto
from .pareto import ParetoSet, WpPair
from .tree_dp import tree_dp_pareto
from .treewidth_dp import tw_dp_pareto
from .vc_dp import vck_pareto

__all__ = [
    "DskpInstance", "Graph", "Variant", "ParetoSet", "WpPair",
    "TreeDecomposition", "NiceTreeDecomposition",
    "parse_instance", "write_instance", "parse_td", "heuristic_td", "make_nice",
    "is_dominating_set", "is_minimal_dominating_set",
    "oracle_pareto", "oracle_decide", "oracle_min_dominating_set", "knapsack_01", "min_vertex_cover",
    "tree_dp_pareto", "tw_dp_pareto", "vck_pareto",
]
