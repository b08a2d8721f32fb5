import random

import pytest

from conftest import naive_pareto_points
from dskp.instance import DskpInstance, Graph, Variant, is_dominating_set
from dskp.oracle import (InstanceTooLarge, is_vertex_cover, knapsack_01, min_vertex_cover, oracle_decide,
                         oracle_min_dominating_set, oracle_pareto, oracle_upper_domination)

P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
K3 = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
STAR5 = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def test_figure1_has_no_feasible_dominating_set(figure1):
    assert oracle_pareto(figure1).points() == []
    assert oracle_decide(figure1) == (False, None)


def test_figure1_with_budget_five(figure1):
    # Enumerated: only {v0} (5,5) or all five leaves (5,5) dominate within s=5.
    assert oracle_pareto(figure1.with_budget(s=5)).points() == [(5, 5)]
    yes, witness = oracle_decide(figure1.with_budget(5, 5))
    assert yes and witness in (0b1, 0b111110)


def test_p3_unit_frontier(p3_unit):
    assert oracle_pareto(p3_unit).points() == [(1, 1), (2, 2), (3, 3)]


def test_k3_single_vertex_witness():
    yes, witness = oracle_decide(DskpInstance(K3, [1] * 3, [1] * 3, 1, 1))
    assert yes and bin(witness).count("1") == 1


def test_min_dominating_set():
    assert oracle_min_dominating_set(Graph.from_edges(6, [(0, i) for i in range(1, 6)])) == 1
    assert oracle_min_dominating_set(Graph.empty(4)) == 4
    assert oracle_min_dominating_set(P3) == 1


def test_knapsack_examples():
    assert knapsack_01([2, 3], [3, 4], 5).points() == [(0, 0), (2, 3), (3, 4), (5, 7)]
    assert knapsack_01([], [], 5).points() == [(0, 0)]
    assert knapsack_01([7], [9], 5).points() == [(0, 0)]


def test_knapsack_matches_enumeration():
    import itertools
    rng = random.Random(4)
    for _ in range(50):
        k = rng.randint(0, 8)
        w = [rng.randint(0, 9) for _ in range(k)]
        p = [rng.randint(0, 9) for _ in range(k)]
        b = rng.randint(0, 30)
        pts = set()
        for r in range(k + 1):
            for c in itertools.combinations(range(k), r):
                if sum(w[i] for i in c) <= b:
                    pts.add((sum(w[i] for i in c), sum(p[i] for i in c)))
        expect = sorted(q for q in pts if not any(o != q and o[0] <= q[0] and o[1] >= q[1] for o in pts))
        assert knapsack_01(w, p, b).points() == expect


def test_min_vertex_cover_examples():
    edge = Graph.from_edges(2, [(0, 1)])
    assert bin(min_vertex_cover(edge)).count("1") == 1
    assert min_vertex_cover(STAR5) == 0b1
    c4 = min_vertex_cover(C4)
    assert bin(c4).count("1") == 2 and is_vertex_cover(C4, c4)


def test_oracle_matches_naive_enumeration_all_variants():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(0, 7)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        variant = rng.choice(list(Variant)) if n else Variant.PLAIN
        k = rng.randint(1, n) if variant is Variant.EXACT_K else None
        inst = DskpInstance(g, [rng.randint(0, 6) for _ in range(n)], [rng.randint(0, 6) for _ in range(n)],
                            rng.randint(0, 20), 0, variant, k)
        front = oracle_pareto(inst)
        assert front.points() == naive_pareto_points(inst)
        for p in front:
            assert inst.weight_of(p.witness) == p.weight and is_dominating_set(g, p.witness)


def test_minimal_frontier_witnesses_are_dominating():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 8)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        inst = DskpInstance(g, [rng.randint(0, 5) for _ in range(n)], [rng.randint(0, 5) for _ in range(n)],
                            30, 0, Variant.MINIMAL)
        for p in oracle_pareto(inst):
            assert is_dominating_set(g, p.witness)


def test_upper_domination():
    assert oracle_upper_domination(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])) == 3
    assert oracle_upper_domination(K3) == 1


def test_size_cap():
    big = Graph.empty(25)
    with pytest.raises(InstanceTooLarge):
        oracle_pareto(DskpInstance(big, [1] * 25, [1] * 25, 1, 1))
