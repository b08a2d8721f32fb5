"""Pseudo-polynomial DSKP solver for trees.

Each vertex ``u`` carries three frontiers over dominating sets of its subtree:

* ``inc``  sets containing ``u``;
* ``dom``  sets without ``u`` in which some child dominates ``u``;
* ``free`` sets without ``u`` where every subtree vertex except ``u`` is
  dominated and ``u`` is still waiting for its parent.

Children are folded in one at a time. Every fold is a capacity-filtered
cross sum, so no frontier ever holds a pair heavier than ``s``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import pareto
from .instance import DskpInstance, Variant
from .pareto import ParetoSet

WITNESS_AUTO_LIMIT = 1024


class NotATree(ValueError):
    pass


@dataclass
class TreeDpStats:
    """Pair-combination counts, per vertex and in total."""

    per_vertex: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.per_vertex.values())


@dataclass(frozen=True)
class TreeDpState:
    inc: ParetoSet
    dom: ParetoSet
    free: ParetoSet


def _post_order(adj, root):
    parent = [-1] * len(adj)
    parent[root] = root
    order = []
    stack = [root]
    while stack:
        u = stack.pop()
        order.append(u)
        for v in adj[u]:
            if parent[v] == -1:
                parent[v] = u
                stack.append(v)
    order.reverse()
    return order, parent


def tree_dp_states(inst: DskpInstance, root: int = 0, witness: bool | None = None,
                   stats: TreeDpStats | None = None, keep: bool = False) -> dict[int, TreeDpState]:
    """Run the DP; return the state of ``root`` (or of every vertex if ``keep``)."""
    g = inst.graph
    if inst.variant is not Variant.PLAIN:
        raise ValueError("the tree DP handles the plain variant only")
    if not g.is_tree():
        raise NotATree("input graph is not a tree")
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range")
    if witness is None:
        witness = g.n <= WITNESS_AUTO_LIMIT
    cap = inst.s
    order, parent = _post_order(g.adjacency, root)
    states: dict[int, TreeDpState] = {}
    zero = pareto.single(0, 0, 0 if witness else None)

    for u in order:
        w_u, a_u = inst.weights[u], inst.profits[u]
        inc = pareto.single(w_u, a_u, 1 << u if witness else None) if w_u <= cap else pareto.EMPTY
        dom = pareto.EMPTY
        free = zero
        work = 0
        for c in g.adjacency[u]:
            if c == parent[u]:
                continue
            child = states[c] if keep else states.pop(c)
            # u in the set dominates c, so c may still be waiting.
            any_child = pareto.merge(child.inc, child.dom, child.free)
            # u out: c must end dominated from inside its own subtree.
            settled = pareto.merge(child.inc, child.dom)
            work += len(inc) * len(any_child) + len(dom) * len(settled)
            work += len(free) * len(child.inc) + len(free) * len(child.dom)
            new_inc = pareto.cross_sum(inc, any_child, cap)
            new_dom = pareto.merge(
                pareto.cross_sum(dom, settled, cap),
                pareto.cross_sum(free, child.inc, cap),
            )
            free = pareto.cross_sum(free, child.dom, cap)
            inc, dom = new_inc, new_dom
        if stats is not None:
            stats.per_vertex[u] = work
        states[u] = TreeDpState(inc, dom, free)
    return states


def tree_dp_pareto(inst: DskpInstance, root: int = 0, witness: bool | None = None,
                   stats: TreeDpStats | None = None) -> ParetoSet:
    """Exact frontier of dominating sets with weight <= s on a tree."""
    if inst.n == 0:
        return pareto.single(0, 0, 0)
    state = tree_dp_states(inst, root, witness, stats)[root]
    return pareto.merge(state.inc, state.dom)
