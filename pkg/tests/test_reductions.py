import pytest

from dskp.instance import DskpInstance, Graph, Variant
from dskp.oracle import knapsack_01, oracle_decide, oracle_pareto
from dskp.reductions import (Circuit, Gate, ReductionError, check_reduction_soundness, eval_circuit,
                             is_bipartite, parse_circuit, reduce_dskp_to_bipartite, reduce_dskp_to_wcs,
                             reduce_ds_to_dskp, reduce_ds_to_kdskp, reduce_knapsack_to_star,
                             reduce_uds_to_minimal_dskp, wcs_satisfiable, write_circuit)

K3 = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
E3 = Graph.empty(3)
K13 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


def test_ds_to_dskp():
    inst = reduce_ds_to_dskp(K3, 1)
    assert inst.weights == (1, 1, 1) and inst.profits == (1, 1, 1) and (inst.s, inst.d) == (1, 1)
    assert inst.variant is Variant.PLAIN
    assert oracle_decide(inst)[0]
    assert oracle_decide(reduce_ds_to_dskp(P3, 1)) == (True, 0b010)
    assert not oracle_decide(reduce_ds_to_dskp(E3, 2))[0]


def test_ds_to_kdskp():
    inst = reduce_ds_to_kdskp(K3, 1)
    assert inst.variant is Variant.EXACT_K and inst.k == 1
    assert oracle_decide(inst)[0]
    assert oracle_decide(reduce_ds_to_kdskp(P3, 2))[0]
    assert not oracle_decide(reduce_ds_to_kdskp(E3, 2))[0]


def test_bipartite_shape(figure1):
    out = reduce_dskp_to_bipartite(figure1)
    assert out.n == 13 and is_bipartite(out.graph)
    assert out.weights[:6] == (0,) * 6 and out.weights[6:12] == figure1.weights and out.weights[12] == 0
    assert set(out.graph.adjacency[12]) == set(range(6, 12))
    assert not is_bipartite(K3)


def test_bipartite_k3():
    inst = DskpInstance(K3, [1] * 3, [1] * 3, 1, 1)
    assert oracle_decide(inst)[0] and oracle_decide(reduce_dskp_to_bipartite(inst))[0]


def test_bipartite_figure1_disagrees(figure1):
    # The zero-cost copies plus the hub dominate every Y vertex for free, so
    # the target reduces to plain knapsack over Y. Figure 1 is NO on the
    # source but YES on the target (four leaf copies reach profit 4).
    assert not oracle_decide(figure1)[0]
    assert oracle_decide(reduce_dskp_to_bipartite(figure1))[0]


def test_bipartite_rejects_variants():
    with pytest.raises(ReductionError):
        reduce_dskp_to_bipartite(reduce_ds_to_kdskp(K3, 1))


def test_knapsack_to_star():
    star = reduce_knapsack_to_star([(2, 3), (3, 4)], 5, 7)
    assert star.graph.adjacency[0] == (1, 2) and star.weights[0] == star.profits[0] == 0
    assert oracle_decide(star)[0]
    assert oracle_pareto(star) == knapsack_01([2, 3], [3, 4], 5)
    empty = reduce_knapsack_to_star([], 0, 0)
    assert empty.n == 1 and oracle_decide(empty)[0]
    assert not oracle_decide(reduce_knapsack_to_star([(7, 9)], 5, 1))[0]


def test_uds_to_minimal():
    p3 = reduce_uds_to_minimal_dskp(P3, 2)
    assert p3.variant is Variant.MINIMAL and (p3.s, p3.d) == (2, 2) and p3.weights == (1, 1, 1)
    assert oracle_decide(p3)[0]
    assert not oracle_decide(reduce_uds_to_minimal_dskp(K3, 2))[0]
    assert oracle_decide(reduce_uds_to_minimal_dskp(K13, 3))[0]
    assert reduce_uds_to_minimal_dskp(P3, 2, paper_weights=True).weights == (1, 1, 0)


def test_uds_to_minimal_counterexample():
    # K_{1,3} has minimal dominating sets of sizes 1 and 3 only, so an upper
    # dominating set of size >= 2 exists while no minimal one has size exactly 2.
    assert not oracle_decide(reduce_uds_to_minimal_dskp(K13, 2))[0]


def _sat_masks(c):
    return [m for m in range(1 << c.n_inputs) if eval_circuit(c, m)]


def test_wcs_examples():
    assert _sat_masks(reduce_dskp_to_wcs(reduce_ds_to_dskp(K3, 1))) == [0b001, 0b010, 0b100]
    assert _sat_masks(reduce_dskp_to_wcs(reduce_ds_to_dskp(P3, 1))) == [0b010]
    assert _sat_masks(reduce_dskp_to_wcs(reduce_ds_to_dskp(Graph.empty(2), 1))) == []


def test_wcs_structure():
    c = reduce_dskp_to_wcs(reduce_ds_to_dskp(P3, 1))
    assert c.weft() <= 2
    assert c.depth() == 3
    assert {g.name for g in c.gates} == {"D0", "D1", "D2", "D_out", "S_out", "F_out"}
    assert wcs_satisfiable(c, 1) == 0b010
    assert eval_circuit(c, [0, 1, 0])
    with pytest.raises(ReductionError):
        eval_circuit(c, [1])
    with pytest.raises(ReductionError):
        reduce_dskp_to_wcs(DskpInstance(P3, [2, 1, 1], [1, 1, 1], 1, 1))


def test_circuit_round_trip_and_validation():
    c = reduce_dskp_to_wcs(reduce_ds_to_dskp(K3, 2))
    text = write_circuit(c)
    assert "gate S_out EXACTLY 2: x0 x1 x2" in text
    assert parse_circuit(text) == c
    with pytest.raises(ReductionError):
        Circuit(1, (Gate("g", "AND", ("h",)), Gate("h", "OR", ("x0",))), "h").validate()
    with pytest.raises(ReductionError):
        Circuit(1, (Gate("g", "OR", ("x0",)), Gate("h", "OR", ("x0",))), "h").validate()
    with pytest.raises(ReductionError):
        parse_circuit("inputs 1\ngate g XOR: x0\noutput g\n")


@pytest.mark.parametrize("rule, trials, max_n", [
    ("ds2dskp", 100, 9), ("ds2kdskp", 100, 9), ("wcs", 50, 8), ("star", 100, 12),
])
def test_sound_rules(rule, trials, max_n):
    report = check_reduction_soundness(rule, trials, max_n, seed=0)
    assert report.ok, report.mismatches[:3]


def test_unsound_rules_are_reported_verbatim():
    for rule in ("bip", "uds2min"):
        report = check_reduction_soundness(rule, 40, 6, seed=0)
        assert not report.ok
        assert all(m["instance"] for m in report.mismatches)


def test_reports_are_reproducible():
    a = check_reduction_soundness("uds2min", 30, 7, seed=5)
    b = check_reduction_soundness("uds2min", 30, 7, seed=5)
    assert a.mismatches == b.mismatches
    with pytest.raises(ReductionError):
        check_reduction_soundness("nope", 1, 1)
