import itertools
import random

import pytest

from dskp.generators import figure1_instance
from dskp.instance import DskpInstance, Graph, Variant, is_dominating_set, is_minimal_dominating_set

ACCEPTANCE_LINES: list[str] = []


def naive_pareto_points(inst: DskpInstance) -> list[tuple[int, int]]:
    """Frontier by plain itertools enumeration; shares no code with the oracle."""
    cands = []
    for r in range(inst.n + 1):
        for combo in itertools.combinations(range(inst.n), r):
            if inst.variant is Variant.EXACT_K and r != inst.k:
                continue
            check = is_minimal_dominating_set if inst.variant is Variant.MINIMAL else is_dominating_set
            if not check(inst.graph, combo):
                continue
            w = sum(inst.weights[v] for v in combo)
            if w <= inst.s:
                cands.append((w, sum(inst.profits[v] for v in combo)))
    return [p for p in sorted(set(cands))
            if not any(q != p and q[0] <= p[0] and q[1] >= p[1] for q in cands)]


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        if g.is_connected():
            return g


def random_tree(rng: random.Random, n: int) -> Graph:
    return Graph.from_edges(n, [(rng.randrange(i), i) for i in range(1, n)])


def random_instance(rng: random.Random, g: Graph, wmax: int, amax: int, smax: int, d: int = 0) -> DskpInstance:
    return DskpInstance(
        g,
        [rng.randint(0, wmax) for _ in range(g.n)],
        [rng.randint(0, amax) for _ in range(g.n)],
        rng.randint(0, smax),
        d,
    )


def assert_witnesses(inst, front):
    for p in front:
        assert p.witness is not None
        assert inst.weight_of(p.witness) == p.weight
        assert inst.profit_of(p.witness) == p.profit
        assert is_dominating_set(inst.graph, p.witness)


@pytest.fixture
def figure1():
    return figure1_instance()


@pytest.fixture
def p3_unit():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    return DskpInstance(g, [1, 1, 1], [1, 1, 1], 3, 2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
