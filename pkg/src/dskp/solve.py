"""Algorithm dispatch shared by the CLI and the benchmark harness."""
from __future__ import annotations

import logging

from .decomposition import TreeDecomposition, heuristic_td, make_nice
from .instance import DskpInstance, Variant
from .oracle import MAX_ORACLE_N, min_vertex_cover, oracle_pareto
from .pareto import ParetoSet
from .tree_dp import tree_dp_pareto
from .treewidth_dp import tw_dp_pareto
from .vc_dp import vck_pareto

log = logging.getLogger(__name__)

ALGORITHMS = ("oracle", "tree", "treewidth", "vck")


def greedy_vertex_cover(inst: DskpInstance) -> int:
    """Endpoints of a maximal matching: a cover at most twice the minimum."""
    cover = 0
    for u, v in inst.graph.edges():
        if not (cover >> u & 1 or cover >> v & 1):
            cover |= (1 << u) | (1 << v)
    return cover


def solve(inst: DskpInstance, algo: str, td: TreeDecomposition | None = None,
          cover: int | None = None, witness: bool | None = None, jobs: int = 1) -> ParetoSet:
    if algo == "oracle":
        return oracle_pareto(inst)
    if inst.variant is not Variant.PLAIN:
        raise ValueError(f"--algo {algo} supports only the plain variant; use --algo oracle")
    if algo == "tree":
        return tree_dp_pareto(inst, witness=witness)
    if algo == "treewidth":
        if td is None:
            log.warning("no decomposition given; using the min-degree heuristic")
            td = heuristic_td(inst.graph)
        else:
            td.validate(inst.graph)
        return tw_dp_pareto(inst, make_nice(td), witness=witness)
    if algo == "vck":
        if cover is None:
            cover = min_vertex_cover(inst.graph) if inst.n <= MAX_ORACLE_N else greedy_vertex_cover(inst)
        return vck_pareto(inst, cover, witness=witness, jobs=jobs)
    raise ValueError(f"unknown algorithm {algo!r}")
