"""Exhaustive ground truth for every variant.

All 2^n subsets are materialised at once with numpy: the arrays for masks
``[2^i, 2^(i+1))`` are the arrays for ``[0, 2^i)`` with vertex ``i`` added, so
each per-subset quantity (weight, profit, dominated set, popcount) costs one
vectorised pass per vertex. The mask index doubles as the witness.
"""
from __future__ import annotations

import itertools

import numpy as np

from .instance import DskpInstance, Graph, Variant
from .pareto import ParetoSet, WpPair

MAX_ORACLE_N = 24


class InstanceTooLarge(ValueError):
    pass


def _check_size(n: int, limit: int) -> None:
    if n > limit:
        raise InstanceTooLarge(f"oracle limited to n <= {limit}, got n={n}")


def _subset_table(values, dtype=np.int64):
    """Per-subset sum of ``values`` (or OR, for masks) via doubling."""
    out = np.zeros(1, dtype=dtype)
    for v in values:
        out = np.concatenate((out, out + v))
    return out


def _dominated_table(g: Graph) -> np.ndarray:
    out = np.zeros(1, dtype=np.uint64)
    for v in range(g.n):
        out = np.concatenate((out, out | np.uint64(g.closed_masks[v])))
    return out


def dominating_mask_table(g: Graph, limit: int = MAX_ORACLE_N) -> np.ndarray:
    """Boolean array over all subset masks: is the subset dominating?"""
    _check_size(g.n, limit)
    return _dominated_table(g) == np.uint64(g.full_mask)


def minimal_dominating_mask_table(g: Graph, limit: int = MAX_ORACLE_N) -> np.ndarray:
    _check_size(g.n, limit)
    dominating = dominating_mask_table(g, limit)
    minimal = dominating.copy()
    masks = np.arange(1 << g.n, dtype=np.int64)
    for v in range(g.n):
        bit = 1 << v
        has_v = (masks & bit) != 0
        # Removing v from a set that contains it must break domination.
        minimal &= ~has_v | ~dominating[masks ^ bit]
    return minimal


def _popcounts(n: int) -> np.ndarray:
    return _subset_table([1] * n, dtype=np.int16)


def _frontier(weights: np.ndarray, profits: np.ndarray, valid: np.ndarray, cap: int) -> ParetoSet:
    idx = np.flatnonzero(valid & (weights <= cap))
    if idx.size == 0:
        return ParetoSet()
    w, a = weights[idx], profits[idx]
    order = np.lexsort((idx, -a, w))
    w, a, idx = w[order], a[order], idx[order]
    running = np.maximum.accumulate(a)
    keep = np.ones(len(a), dtype=bool)
    keep[1:] = a[1:] > running[:-1]
    return ParetoSet._trusted(tuple(
        WpPair(wi, ai, m) for wi, ai, m in zip(w[keep].tolist(), a[keep].tolist(), idx[keep].tolist())
    ))


def feasible_mask_table(inst: DskpInstance, limit: int = MAX_ORACLE_N) -> np.ndarray:
    """Subsets satisfying the variant's structural predicate (capacity ignored)."""
    g = inst.graph
    if inst.variant is Variant.MINIMAL:
        return minimal_dominating_mask_table(g, limit)
    valid = dominating_mask_table(g, limit)
    if inst.variant is Variant.EXACT_K:
        valid &= _popcounts(g.n) == inst.k
    return valid


def oracle_pareto(inst: DskpInstance, limit: int = MAX_ORACLE_N) -> ParetoSet:
    """Exact frontier over all feasible subsets of weight <= s."""
    _check_size(inst.n, limit)
    valid = feasible_mask_table(inst, limit)
    weights = _subset_table(inst.weights)
    profits = _subset_table(inst.profits)
    return _frontier(weights, profits, valid, inst.s)


def oracle_decide(inst: DskpInstance, limit: int = MAX_ORACLE_N) -> tuple[bool, int | None]:
    for p in oracle_pareto(inst, limit):
        if p.profit >= inst.d:
            return True, p.witness
    return False, None


def oracle_min_dominating_set(g: Graph, limit: int = MAX_ORACLE_N) -> int:
    dom = dominating_mask_table(g, limit)
    return int(_popcounts(g.n)[dom].min())


def oracle_upper_domination(g: Graph, limit: int = MAX_ORACLE_N) -> int:
    """Largest size of a minimal dominating set."""
    mds = minimal_dominating_mask_table(g, limit)
    return int(_popcounts(g.n)[mds].max())


def knapsack_01(weights, profits, b: int) -> ParetoSet:
    """0/1 knapsack frontier from an exact-weight capacity-indexed table."""
    neg = -1
    best = [0] + [neg] * b  # best[c]: max profit at total weight exactly c
    for w, p in zip(weights, profits):
        for c in range(b, w - 1, -1):
            if best[c - w] != neg and best[c - w] + p > best[c]:
                best[c] = best[c - w] + p
    out = []
    top = -1
    for c, p in enumerate(best):
        if p > top:
            out.append(WpPair(c, p))
            top = p
    return ParetoSet._trusted(tuple(out))


def is_vertex_cover(g: Graph, cover: int) -> bool:
    return all(cover >> u & 1 or cover >> v & 1 for u, v in g.edges())


def min_vertex_cover(g: Graph, limit: int = MAX_ORACLE_N) -> int:
    """A minimum-cardinality vertex cover (as a bit mask), smallest ids first."""
    _check_size(g.n, limit)
    edges = list(g.edges())
    for size in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if all(mask >> u & 1 or mask >> v & 1 for u, v in edges):
                return mask
    return g.full_mask
