"""Instance transformers between DSKP and related problems, plus soundness checks.

Each ``reduce_*`` builds the target instance; :func:`check_reduction_soundness`
samples random source instances and compares brute-force answers on both
sides, reporting every disagreement verbatim.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .instance import DskpInstance, Graph, Variant, write_instance
from .oracle import (knapsack_01, oracle_decide, oracle_min_dominating_set, oracle_pareto,
                     oracle_upper_domination)
from .pareto import best_profit


class ReductionError(ValueError):
    pass


def _unit(g: Graph, k: int, variant=Variant.PLAIN, kk=None) -> DskpInstance:
    return DskpInstance(g, [1] * g.n, [1] * g.n, k, k, variant, kk)


def reduce_ds_to_dskp(g: Graph, k: int) -> DskpInstance:
    return _unit(g, k)


def reduce_ds_to_kdskp(g: Graph, k: int) -> DskpInstance:
    return _unit(g, k, Variant.EXACT_K, k)


def reduce_dskp_to_bipartite(inst: DskpInstance) -> DskpInstance:
    """Vertices ``0..n-1`` are zero-cost copies, ``n..2n-1`` carry the originals, ``2n`` is the hub."""
    if inst.variant is not Variant.PLAIN:
        raise ReductionError("bipartite reduction expects a plain instance")
    n = inst.n
    hub = 2 * n
    edges = [(i, n + i) for i in range(n)]
    for u, v in inst.graph.edges():
        edges.append((u, n + v))
        edges.append((v, n + u))
    edges.extend((n + i, hub) for i in range(n))
    g = Graph.from_edges(2 * n + 1, edges)
    return DskpInstance(
        g,
        [0] * n + list(inst.weights) + [0],
        [0] * n + list(inst.profits) + [0],
        inst.s, inst.d,
    )


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] != -1:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for v in g.adjacency[u]:
                if side[v] == -1:
                    side[v] = 1 - side[u]
                    stack.append(v)
                elif side[v] == side[u]:
                    return False
    return True


def reduce_knapsack_to_star(items, b: int, q: int) -> DskpInstance:
    """Centre ``0`` costs nothing; leaf ``i`` carries item ``i-1``."""
    items = list(items)
    n = len(items) + 1
    g = Graph.from_edges(n, [(0, i) for i in range(1, n)])
    return DskpInstance(g, [0] + [w for w, _ in items], [0] + [p for _, p in items], b, q)


def reduce_uds_to_minimal_dskp(g: Graph, k: int, paper_weights: bool = False) -> DskpInstance:
    """Unit weights by default; ``paper_weights`` zeroes the last vertex's weight."""
    weights = [1] * g.n
    if paper_weights and g.n:
        weights[-1] = 0
    return DskpInstance(g, weights, [1] * g.n, k, k, Variant.MINIMAL)


# -- weighted circuit satisfiability -----------------------------------------

@dataclass(frozen=True)
class Gate:
    name: str
    op: str  # OR | AND | EXACTLY
    operands: tuple[str, ...]
    k: int | None = None


@dataclass(frozen=True)
class Circuit:
    n_inputs: int
    gates: tuple[Gate, ...]
    output: str

    def validate(self) -> None:
        known = {f"x{i}" for i in range(self.n_inputs)}
        for gate in self.gates:
            if gate.name in known:
                raise ReductionError(f"duplicate node {gate.name}")
            if gate.op not in ("OR", "AND", "EXACTLY"):
                raise ReductionError(f"unknown gate type {gate.op}")
            if (gate.op == "EXACTLY") != (gate.k is not None):
                raise ReductionError(f"gate {gate.name}: threshold only on EXACTLY")
            for ref in gate.operands:
                if ref not in known:
                    raise ReductionError(f"gate {gate.name} reads {ref} before it is defined")
            known.add(gate.name)
        if self.output not in {g.name for g in self.gates}:
            raise ReductionError(f"output {self.output} is not a gate")
        used = {ref for g in self.gates for ref in g.operands}
        dangling = [g.name for g in self.gates if g.name != self.output and g.name not in used]
        if dangling:
            raise ReductionError(f"gates {dangling} feed nothing; circuit must have one output")

    def weft(self) -> int:
        """Most large gates (fan-in > 2) on any input-to-output path."""
        depth = {f"x{i}": 0 for i in range(self.n_inputs)}
        for gate in self.gates:
            below = max((depth[r] for r in gate.operands), default=0)
            depth[gate.name] = below + (len(gate.operands) > 2)
        return depth[self.output]

    def depth(self) -> int:
        depth = {f"x{i}": 0 for i in range(self.n_inputs)}
        for gate in self.gates:
            depth[gate.name] = 1 + max((depth[r] for r in gate.operands), default=0)
        return depth[self.output]


def eval_circuit(c: Circuit, assignment) -> bool:
    """Evaluate gate by gate; ``assignment`` is a bit mask or a 0/1 sequence."""
    if isinstance(assignment, int):
        bits = [bool(assignment >> i & 1) for i in range(c.n_inputs)]
    else:
        bits = [bool(b) for b in assignment]
        if len(bits) != c.n_inputs:
            raise ReductionError(f"expected {c.n_inputs} inputs, got {len(bits)}")
    value = {f"x{i}": b for i, b in enumerate(bits)}
    for gate in c.gates:
        args = [value[r] for r in gate.operands]
        if gate.op == "OR":
            value[gate.name] = any(args)
        elif gate.op == "AND":
            value[gate.name] = all(args)
        else:
            value[gate.name] = sum(args) == gate.k
    return value[c.output]


def reduce_dskp_to_wcs(inst: DskpInstance, k: int | None = None) -> Circuit:
    if k is None:
        k = inst.s
    if any(w != 1 for w in inst.weights) or any(a != 1 for a in inst.profits) or not inst.s == inst.d == k:
        raise ReductionError("WCS reduction needs unit weights/profits and s = d = k")
    g = inst.graph
    gates = []
    for i in range(g.n):
        closed = sorted({i, *g.adjacency[i]})
        gates.append(Gate(f"D{i}", "OR", tuple(f"x{b}" for b in closed)))
    gates.append(Gate("D_out", "AND", tuple(f"D{i}" for i in range(g.n))))
    gates.append(Gate("S_out", "EXACTLY", tuple(f"x{i}" for i in range(g.n)), k))
    gates.append(Gate("F_out", "AND", ("D_out", "S_out")))
    c = Circuit(g.n, tuple(gates), "F_out")
    c.validate()
    return c


def write_circuit(c: Circuit) -> str:
    lines = [f"inputs {c.n_inputs}"]
    for g in c.gates:
        head = f"EXACTLY {g.k}" if g.op == "EXACTLY" else g.op
        lines.append(f"gate {g.name} {head}: {' '.join(g.operands)}".rstrip())
    lines.append(f"output {c.output}")
    return "\n".join(lines) + "\n"


def parse_circuit(text: str) -> Circuit:
    n = None
    gates = []
    output = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c "):
            continue
        if line.startswith("inputs "):
            n = int(line.split()[1])
        elif line.startswith("gate "):
            head, _, ops = line.partition(":")
            tok = head.split()
            if len(tok) < 3:
                raise ReductionError(f"line {lineno}: malformed gate")
            k = int(tok[3]) if tok[2] == "EXACTLY" else None
            gates.append(Gate(tok[1], tok[2], tuple(ops.split()), k))
        elif line.startswith("output "):
            output = line.split()[1]
        else:
            raise ReductionError(f"line {lineno}: unknown line")
    if n is None or output is None:
        raise ReductionError("circuit needs 'inputs' and 'output' lines")
    c = Circuit(n, tuple(gates), output)
    c.validate()
    return c


def wcs_satisfiable(c: Circuit, k: int) -> int | None:
    """A satisfying input mask of weight exactly ``k``, by enumeration."""
    for combo in itertools.combinations(range(c.n_inputs), k):
        mask = sum(1 << i for i in combo)
        if eval_circuit(c, mask):
            return mask
    return None


# -- soundness ---------------------------------------------------------------

@dataclass
class SoundnessReport:
    rule: str
    trials: int
    seed: int
    max_n: int
    mismatches: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        return f"{self.rule}: {self.trials} trials, {len(self.mismatches)} mismatches (seed={self.seed}, n<={self.max_n})"


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.choice((0.2, 0.35, 0.5, 0.7))
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def _graph_text(g: Graph, k: int) -> str:
    return f"n={g.n} k={k} edges={list(g.edges())}"


def _trial_ds(rng, max_n, exact):
    n = rng.randint(1, max_n)
    g = random_graph(rng, n)
    k = rng.randint(1, n)
    source = oracle_min_dominating_set(g) <= k
    target = oracle_decide(reduce_ds_to_kdskp(g, k) if exact else reduce_ds_to_dskp(g, k))[0]
    return source, target, _graph_text(g, k)


def _random_instance(rng, n, wmax=6, amax=6) -> DskpInstance:
    g = random_graph(rng, n)
    w = [rng.randint(0, wmax) for _ in range(n)]
    a = [rng.randint(0, amax) for _ in range(n)]
    return DskpInstance(g, w, a, rng.randint(0, sum(w)), rng.randint(0, sum(a)))


def _trial_bip(rng, max_n):
    inst = _random_instance(rng, rng.randint(1, max_n))
    target_inst = reduce_dskp_to_bipartite(inst)
    if not is_bipartite(target_inst.graph):
        raise ReductionError("bipartite reduction produced an odd cycle")
    return oracle_decide(inst)[0], oracle_decide(target_inst)[0], write_instance(inst)


def _trial_uds(rng, max_n):
    n = rng.randint(1, max_n)
    g = random_graph(rng, n)
    k = rng.randint(1, n)
    return oracle_upper_domination(g) >= k, oracle_decide(reduce_uds_to_minimal_dskp(g, k))[0], _graph_text(g, k)


def _trial_wcs(rng, max_n):
    n = rng.randint(1, max_n)
    g = random_graph(rng, n)
    k = rng.randint(1, n)
    inst = reduce_ds_to_dskp(g, k)
    # Source: a dominating set of size exactly k.
    source = oracle_decide(DskpInstance(g, inst.weights, inst.profits, k, k, Variant.EXACT_K, k))[0]
    target = wcs_satisfiable(reduce_dskp_to_wcs(inst, k), k) is not None
    return source, target, _graph_text(g, k)


def _trial_star(rng, max_n):
    items = [(rng.randint(0, 10), rng.randint(0, 10)) for _ in range(rng.randint(0, max_n))]
    b = rng.randint(0, sum(w for w, _ in items))
    q = rng.randint(0, sum(p for _, p in items))
    ks = knapsack_01([w for w, _ in items], [p for _, p in items], b)
    star = reduce_knapsack_to_star(items, b, q)
    frontier = oracle_pareto(star)
    source = (best_profit(ks, b) or 0) >= q
    target = oracle_decide(star)[0] and frontier == ks
    return source, target, f"items={items} b={b} q={q}"


_TRIALS = {
    "ds2dskp": lambda rng, n: _trial_ds(rng, n, exact=False),
    "ds2kdskp": lambda rng, n: _trial_ds(rng, n, exact=True),
    "bip": _trial_bip,
    "uds2min": _trial_uds,
    "wcs": _trial_wcs,
    "star": _trial_star,
}
RULES = tuple(_TRIALS)


def check_reduction_soundness(rule: str, trials: int, max_n: int, seed: int = 0) -> SoundnessReport:
    """Compare source and target oracle answers on ``trials`` random sources.

    Trial ``t`` draws from its own RNG seeded by ``(seed, t)``, so a report
    is reproducible from its parameters and any single trial can be replayed.
    For ``star`` the target side also requires frontier equality with the
    knapsack frontier.
    """
    if rule not in _TRIALS:
        raise ReductionError(f"unknown rule {rule!r}; choose from {', '.join(RULES)}")
    report = SoundnessReport(rule, trials, seed, max_n)
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")
        source, target, text = _TRIALS[rule](rng, max_n)
        if source != target:
            report.mismatches.append({"trial": t, "source": source, "target": target, "instance": text})
    return report
