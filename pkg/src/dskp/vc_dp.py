"""DSKP parameterised by a vertex cover.

For every subset ``chosen`` of the cover ``S`` the cover vertices in the
solution are fixed. Independent vertices whose neighbours are all outside
``chosen`` can only dominate themselves, so they are forced in. Cover
vertices still undominated after that (``R``) must be dominated by optional
independent vertices; a DP over those vertices tracks the still-uncovered
part of ``R`` as a bit mask, one frontier per mask.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import pareto
from .instance import DskpInstance, Variant, as_mask, members
from .pareto import ParetoSet

MAX_COVER = 30


class NotAVertexCover(ValueError):
    pass


class CoverTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class VcSplit:
    cover: int
    independent: int

    @classmethod
    def of(cls, inst: DskpInstance, cover) -> VcSplit:
        mask = as_mask(cover)
        g = inst.graph
        if mask >> g.n:
            raise NotAVertexCover("cover holds vertices outside the graph")
        for u, v in g.edges():
            if not (mask >> u & 1 or mask >> v & 1):
                raise NotAVertexCover(f"edge {u}-{v} has no endpoint in the cover")
        return cls(mask, g.full_mask & ~mask)


def _solve_subset(inst: DskpInstance, split: VcSplit, chosen: int, witness: bool, order_key=None) -> ParetoSet:
    g = inst.graph
    closed = g.closed_masks
    cap = inst.s
    forced = 0
    optional = []
    for v in members(split.independent):
        if closed[v] & chosen:
            optional.append(v)
        else:
            forced |= 1 << v
    base = chosen | forced
    base_w = sum(inst.weights[v] for v in members(base))
    if base_w > cap:
        return pareto.EMPTY
    base_a = sum(inst.profits[v] for v in members(base))
    covered = 0
    for v in members(base):
        covered |= closed[v]
    need = split.cover & ~chosen & ~covered
    if need and not optional:
        return pareto.EMPTY

    # Optional vertices that touch nothing in R only ever add weight/profit;
    # they still go through the same fold.
    if order_key is None:
        optional.sort(key=lambda v: (-bin(closed[v] & need).count("1"), v))
    else:
        optional.sort(key=order_key)
    states: dict[int, ParetoSet] = {need: pareto.single(base_w, base_a, base if witness else None)}
    for v in optional:
        hit = closed[v] & need
        w_v, a_v = inst.weights[v], inst.profits[v]
        nxt = dict(states)
        for left, front in states.items():
            taken = pareto.shift(front, w_v, a_v, 1 << v if witness else None, cap)
            if taken:
                key = left & ~hit
                nxt[key] = pareto.merge(nxt[key], taken) if key in nxt else taken
        states = nxt
    return states.get(0, pareto.EMPTY)


def _solve_range(args):
    inst, split, subsets, witness = args
    return [_solve_subset(inst, split, c, witness) for c in subsets]


def _subsets(mask: int) -> list[int]:
    """All submasks of ``mask`` in increasing numeric order."""
    bits = members(mask)
    out = []
    for i in range(1 << len(bits)):
        sub = 0
        for j, b in enumerate(bits):
            if i >> j & 1:
                sub |= 1 << b
        out.append(sub)
    return out


def vck_pareto(inst: DskpInstance, cover, witness: bool | None = None, jobs: int = 1,
               counter: list[int] | None = None, order_key=None) -> ParetoSet:
    """Exact frontier given any vertex cover of the instance graph."""
    if inst.variant is not Variant.PLAIN:
        raise ValueError("the vertex-cover DP handles the plain variant only")
    split = VcSplit.of(inst, cover)
    size = bin(split.cover).count("1")
    if size > MAX_COVER:
        raise CoverTooLarge(f"cover of size {size} exceeds the limit of {MAX_COVER}")
    if witness is None:
        witness = inst.n <= 1024
    subsets = _subsets(split.cover)
    if counter is not None:
        counter[0] += len(subsets)
    if jobs > 1 and len(subsets) >= 64 and order_key is None:
        chunk = -(-len(subsets) // jobs)
        parts = [(inst, split, subsets[i:i + chunk], witness) for i in range(0, len(subsets), chunk)]
        with ProcessPoolExecutor(jobs) as pool:
            results = [fr for part in pool.map(_solve_range, parts) for fr in part]
    else:
        results = [_solve_subset(inst, split, c, witness, order_key) for c in subsets]
    return pareto.merge(*results)
