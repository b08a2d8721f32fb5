import random

import pytest

from conftest import assert_witnesses, random_instance
from dskp.instance import DskpInstance, Graph, Variant
from dskp.oracle import is_vertex_cover, min_vertex_cover, oracle_pareto
from dskp.vc_dp import CoverTooLarge, NotAVertexCover, VcSplit, vck_pareto


def _gnp(rng, n, p):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def _random_cover(rng, g):
    # Start from everything, drop vertices while the rest still covers.
    mask = g.full_mask
    for v in rng.sample(range(g.n), g.n):
        if is_vertex_cover(g, mask & ~(1 << v)) and rng.random() < 0.7:
            mask &= ~(1 << v)
    return mask


def test_star_k13():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    inst = DskpInstance(g, [1] * 4, [1] * 4, 4, 0)
    assert vck_pareto(inst, {0}).points() == [(1, 1), (2, 2), (3, 3), (4, 4)]


def test_single_edge_matches_oracle():
    inst = DskpInstance(Graph.from_edges(2, [(0, 1)]), [1, 2], [5, 1], 3, 0)
    assert vck_pareto(inst, {0}) == oracle_pareto(inst)
    assert vck_pareto(inst, {0}).points() == [(1, 5), (3, 6)]


def test_edgeless_forces_everything():
    inst = DskpInstance(Graph.empty(3), [1, 2, 3], [4, 5, 6], 6, 0)
    assert vck_pareto(inst, set()).points() == [(6, 15)]
    assert vck_pareto(inst.with_budget(s=5), set()).points() == []


def test_errors():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    inst = DskpInstance(g, [1] * 3, [1] * 3, 3, 1)
    with pytest.raises(NotAVertexCover):
        vck_pareto(inst, {0})
    with pytest.raises(NotAVertexCover):
        vck_pareto(inst, {1, 5})
    big = Graph.from_edges(31, [(i, 30) for i in range(30)])
    with pytest.raises(CoverTooLarge):
        vck_pareto(DskpInstance(big, [1] * 31, [1] * 31, 3, 1), set(range(30)) | {30})
    with pytest.raises(ValueError):
        vck_pareto(DskpInstance(g, [1] * 3, [1] * 3, 3, 1, Variant.MINIMAL), {1})


def test_split():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    split = VcSplit.of(DskpInstance(g, [1] * 3, [1] * 3, 3, 1), {1})
    assert (split.cover, split.independent) == (0b010, 0b101)


def test_matches_oracle_with_any_cover():
    rng = random.Random(4)
    for _ in range(200):
        g = _gnp(rng, rng.randint(1, 10), rng.choice((0.2, 0.35, 0.5)))
        inst = random_instance(rng, g, 7, 7, 25)
        expected = oracle_pareto(inst)
        front = vck_pareto(inst, min_vertex_cover(g))
        assert front == expected
        assert_witnesses(inst, front)
        for _ in range(3):
            cover = _random_cover(rng, g)
            assert is_vertex_cover(g, cover)
            assert vck_pareto(inst, cover) == expected


def test_fold_order_does_not_matter():
    rng = random.Random(6)
    for _ in range(40):
        g = _gnp(rng, rng.randint(2, 10), 0.3)
        inst = random_instance(rng, g, 6, 6, 20)
        cover = min_vertex_cover(g)
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert vck_pareto(inst, cover, order_key=perm.__getitem__) == vck_pareto(inst, cover)


def test_subset_count():
    rng = random.Random(2)
    for _ in range(20):
        g = _gnp(rng, rng.randint(1, 10), 0.4)
        inst = random_instance(rng, g, 5, 5, 20)
        cover = _random_cover(rng, g)
        counter = [0]
        vck_pareto(inst, cover, counter=counter)
        assert counter[0] == 2 ** bin(cover).count("1")


def test_parallel_matches_serial():
    rng = random.Random(3)
    g = _gnp(rng, 12, 0.5)
    inst = random_instance(rng, g, 6, 6, 30)
    cover = g.full_mask & ~1
    assert vck_pareto(inst, cover, jobs=2) == vck_pareto(inst, cover)
