"""DSKP over a nice tree decomposition with BLACK/WHITE/GRAY bag colourings.

``tables[i][code]`` is the frontier for node ``i`` and the colouring with
index ``code``. A colouring assigns each bag vertex (bags are sorted tuples)
one of:

* BLACK  in the partial solution;
* WHITE  not chosen, already dominated by the partial solution;
* GRAY   not chosen, domination not required yet.

GRAY is a relaxation, so a GRAY entry always contains everything the WHITE
entry would. That is what makes the join rule (WHITE splits into
WHITE/GRAY or GRAY/WHITE) and the BLACK-introduce rule (WHITE neighbours of
the new vertex are looked up as GRAY in the child) exact.

Colourings are indexed base 3 with the first bag vertex most significant,
which is the order ``itertools.product`` enumerates them in.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from . import pareto
from .decomposition import FORGET, INTRODUCE, JOIN, LEAF, DecompositionError, NiceTreeDecomposition
from .instance import DskpInstance, Variant
from .pareto import ParetoSet


class Color(enum.IntEnum):
    WHITE = 0
    BLACK = 1
    GRAY = 2


W, B, G = Color.WHITE, Color.BLACK, Color.GRAY
_JOIN_SPLITS = {B: ((B, B),), G: ((G, G),), W: ((W, G), (G, W))}


@dataclass
class TwDpStats:
    colorings: dict[int, int] = field(default_factory=dict)
    join_triples: dict[int, int] = field(default_factory=dict)


def colorings(size: int):
    return itertools.product((W, B, G), repeat=size)


def encode(coloring) -> int:
    code = 0
    for c in coloring:
        code = code * 3 + int(c)
    return code


def _black_sums(inst, bag, coloring):
    w = a = 0
    mask = 0
    for v, c in zip(bag, coloring):
        if c == B:
            w += inst.weights[v]
            a += inst.profits[v]
            mask |= 1 << v
    return w, a, mask


def leaf_case(inst: DskpInstance, bag, witness: bool = True) -> list[ParetoSet]:
    adj = inst.graph.adjacency
    table = []
    for col in colorings(len(bag)):
        black = {v for v, c in zip(bag, col) if c == B}
        valid = all(c != W or any(u in black for u in adj[v]) for v, c in zip(bag, col))
        w, a, mask = _black_sums(inst, bag, col)
        if valid and w <= inst.s:
            table.append(pareto.single(w, a, mask if witness else None))
        else:
            table.append(pareto.EMPTY)
    return table


def forget_case(child: list[ParetoSet], child_bag, v: int) -> list[ParetoSet]:
    pos = child_bag.index(v)
    size = len(child_bag) - 1
    table = []
    for col in colorings(size):
        col = list(col)
        with_black = encode(col[:pos] + [B] + col[pos:])
        with_white = encode(col[:pos] + [W] + col[pos:])
        table.append(pareto.merge(child[with_black], child[with_white]))
    return table


def introduce_case(inst: DskpInstance, child: list[ParetoSet], bag, x: int, witness: bool = True) -> list[ParetoSet]:
    pos = bag.index(x)
    nbrs = set(inst.graph.adjacency[x])
    rest = bag[:pos] + bag[pos + 1:]
    w_x, a_x = inst.weights[x], inst.profits[x]
    table = []
    for col in colorings(len(bag)):
        cx = col[pos]
        sub = col[:pos] + col[pos + 1:]
        if cx == G:
            table.append(child[encode(sub)])
        elif cx == W:
            seen_black = any(c == B and v in nbrs for v, c in zip(rest, sub))
            table.append(child[encode(sub)] if seen_black else pareto.EMPTY)
        else:
            relaxed = [G if (c == W and v in nbrs) else c for v, c in zip(rest, sub)]
            table.append(pareto.shift(child[encode(relaxed)], w_x, a_x, 1 << x if witness else None, inst.s))
    return table


def join_case(inst: DskpInstance, left: list[ParetoSet], right: list[ParetoSet], bag,
              counter: list[int] | None = None) -> list[ParetoSet]:
    table = []
    for col in colorings(len(bag)):
        bw, ba, _ = _black_sums(inst, bag, col)
        parts = []
        for split in itertools.product(*(_JOIN_SPLITS[c] for c in col)):
            if counter is not None:
                counter[0] += 1
            lc = encode(s[0] for s in split)
            rc = encode(s[1] for s in split)
            summed = pareto.cross_sum(left[lc], right[rc], inst.s + bw)
            if summed:
                parts.append(pareto.shift(summed, -bw, -ba))
        table.append(pareto.merge(*parts))
    return table


def tw_dp_tables(inst: DskpInstance, ntd: NiceTreeDecomposition, witness: bool | None = None,
                 stats: TwDpStats | None = None, keep: bool = False, validate: bool = True) -> dict[int, list[ParetoSet]]:
    if inst.variant is not Variant.PLAIN:
        raise ValueError("the treewidth DP handles the plain variant only")
    if validate:
        try:
            ntd.validate(inst.graph)
        except DecompositionError as exc:
            raise DecompositionError(f"decomposition invalid for graph: {exc}") from exc
    if witness is None:
        witness = inst.n <= 1024
    tables: dict[int, list[ParetoSet]] = {}
    for i, nd in enumerate(ntd.nodes):
        take = tables.__getitem__ if keep else tables.pop
        if nd.kind == LEAF:
            tab = leaf_case(inst, nd.bag, witness)
        elif nd.kind == FORGET:
            child = ntd.nodes[nd.children[0]]
            tab = forget_case(take(nd.children[0]), child.bag, nd.vertex)
        elif nd.kind == INTRODUCE:
            tab = introduce_case(inst, take(nd.children[0]), nd.bag, nd.vertex, witness)
        elif nd.kind == JOIN:
            counter = [0]
            tab = join_case(inst, take(nd.children[0]), take(nd.children[1]), nd.bag, counter)
            if stats is not None:
                stats.join_triples[i] = counter[0]
        else:
            raise DecompositionError(f"unknown node kind {nd.kind!r}")
        if stats is not None:
            stats.colorings[i] = len(tab)
        tables[i] = tab
    return tables


def tw_dp_pareto(inst: DskpInstance, ntd: NiceTreeDecomposition, witness: bool | None = None,
                 stats: TwDpStats | None = None) -> ParetoSet:
    tables = tw_dp_tables(inst, ntd, witness, stats)
    root = ntd.nodes[ntd.root]
    final = tables[ntd.root]
    # Nothing is left to dominate GRAY root vertices, so only WHITE/BLACK count.
    return pareto.merge(*(final[encode(col)] for col in colorings(len(root.bag)) if G not in col))
