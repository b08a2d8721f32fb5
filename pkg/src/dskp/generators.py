"""Deterministic instance families for experiments and tests."""
from __future__ import annotations

import random

from .instance import DskpInstance, Graph

FAMILIES = ("star", "path", "random-tree", "gnp", "split", "figure1")


def figure1_instance(s: int = 4, d: int = 4) -> DskpInstance:
    """Star K_{1,5}: centre weight/profit 5, leaves 1; s = d = 4 by default."""
    g = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
    return DskpInstance(g, [5, 1, 1, 1, 1, 1], [5, 1, 1, 1, 1, 1], s, d)


def random_tree_edges(rng: random.Random, n: int) -> list[tuple[int, int]]:
    return [(rng.randrange(i), i) for i in range(1, n)]


def _edges(family: str, n: int, p: float, rng: random.Random) -> list[tuple[int, int]]:
    if family == "star":
        return [(0, i) for i in range(1, n)]
    if family == "path":
        return [(i, i + 1) for i in range(n - 1)]
    if family == "random-tree":
        return random_tree_edges(rng, n)
    if family == "gnp":
        return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    if family == "split":
        # Clique on the first ceil(n/2) vertices, the rest independent.
        clique = (n + 1) // 2
        edges = [(u, v) for u in range(clique) for v in range(u + 1, clique)]
        edges += [(u, v) for v in range(clique, n) for u in range(clique) if rng.random() < p]
        return edges
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def generate(family: str, n: int = 10, p: float = 0.3, wmax: int = 10, amax: int = 10,
             seed: int = 0, s: int | None = None, d: int | None = None) -> DskpInstance:
    """Weights are drawn from ``1..wmax`` and profits from ``1..amax``.

    ``s`` defaults to half the total weight and ``d`` to a quarter of the
    total profit.
    """
    if family == "figure1":
        return figure1_instance(4 if s is None else s, 4 if d is None else d)
    if n < 0 or wmax < 0 or amax < 0 or not 0.0 <= p <= 1.0:
        raise ValueError("need n, wmax, amax >= 0 and 0 <= p <= 1")
    if family in ("random-tree", "star", "path") and n == 0:
        raise ValueError(f"{family} needs n >= 1")
    rng = random.Random(seed)
    edges = _edges(family, n, p, rng)
    weights = [rng.randint(min(1, wmax), wmax) for _ in range(n)]
    profits = [rng.randint(min(1, amax), amax) for _ in range(n)]
    g = Graph.from_edges(n, edges)
    if s is None:
        s = sum(weights) // 2
    if d is None:
        d = sum(profits) // 4
    if s < 0 or d < 0:
        raise ValueError("s and d must be non-negative")
    return DskpInstance(g, weights, profits, s, d)
