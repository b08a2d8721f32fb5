"""Sets of undominated (weight, profit) pairs.

A pair ``q`` dominates ``r`` when ``q.weight <= r.weight`` and
``q.profit >= r.profit`` with at least one strict inequality; equal pairs are
duplicates. A :class:`ParetoSet` keeps its pairs sorted by strictly increasing
weight and strictly increasing profit, which is exactly the antichain of
maxima under that order.

Witnesses are optional vertex bit masks carried alongside a pair. They take
no part in equality or dominance; when two equal pairs compete, the one seen
first survives.
"""
from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

import numpy as np

# Above this many candidate sums cross_sum switches to the vectorised path.
_NUMPY_THRESHOLD = 512


class WpPair(NamedTuple):
    weight: int
    profit: int
    witness: int | None = None


def _prune(pairs: list[WpPair]) -> tuple[WpPair, ...]:
    # Stable sort keeps the first-seen witness among equal pairs.
    pairs.sort(key=lambda p: (p.weight, -p.profit))
    out = []
    best = -1
    for p in pairs:
        if p.profit > best:
            out.append(p)
            best = p.profit
    return tuple(out)


class ParetoSet:
    __slots__ = ("_pairs",)

    def __init__(self, pairs: Iterable = ()):
        self._pairs = _prune([WpPair(*p) for p in pairs])

    @classmethod
    def _trusted(cls, pairs: tuple[WpPair, ...]) -> ParetoSet:
        obj = cls.__new__(cls)
        obj._pairs = pairs
        return obj

    @property
    def pairs(self) -> tuple[WpPair, ...]:
        return self._pairs

    def points(self) -> list[tuple[int, int]]:
        return [(p.weight, p.profit) for p in self._pairs]

    def __iter__(self) -> Iterator[WpPair]:
        return iter(self._pairs)

    def __len__(self) -> int:
        return len(self._pairs)

    def __bool__(self) -> bool:
        return bool(self._pairs)

    def __eq__(self, other):
        if isinstance(other, ParetoSet):
            return self.points() == other.points()
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.points()))

    def __repr__(self):
        return "ParetoSet(" + ", ".join(f"({w},{a})" for w, a in self.points()) + ")"

    def is_antichain(self) -> bool:
        ps = self._pairs
        return all(
            ps[i].weight < ps[i + 1].weight and ps[i].profit < ps[i + 1].profit
            for i in range(len(ps) - 1)
        )


EMPTY = ParetoSet()


def single(weight: int, profit: int, witness: int | None = None) -> ParetoSet:
    return ParetoSet._trusted((WpPair(weight, profit, witness),))


def insert(pset: ParetoSet, pair) -> ParetoSet:
    return ParetoSet._trusted(_prune(list(pset.pairs) + [WpPair(*pair)]))


def merge(*sets: ParetoSet) -> ParetoSet:
    nonempty = [s for s in sets if s]
    if not nonempty:
        return EMPTY
    if len(nonempty) == 1:
        return nonempty[0]
    pairs: list[WpPair] = []
    for s in nonempty:
        pairs.extend(s.pairs)
    return ParetoSet._trusted(_prune(pairs))


def _union(a: int | None, b: int | None) -> int | None:
    if a is None or b is None:
        return None
    return a | b


def cross_sum(a: ParetoSet, b: ParetoSet, cap: int) -> ParetoSet:
    """Antichain of all pairwise sums from ``a`` x ``b`` with weight <= cap."""
    if not a or not b:
        return EMPTY
    pa, pb = a.pairs, b.pairs
    if len(pa) * len(pb) >= _NUMPY_THRESHOLD:
        return _cross_sum_np(pa, pb, cap)
    out = []
    for x in pa:
        if x.weight > cap:
            break
        room = cap - x.weight
        for y in pb:
            if y.weight > room:
                break
            out.append(WpPair(x.weight + y.weight, x.profit + y.profit, _union(x.witness, y.witness)))
    return ParetoSet._trusted(_prune(out))


def _cross_sum_np(pa, pb, cap) -> ParetoSet:
    wa = np.fromiter((p.weight for p in pa), dtype=np.int64, count=len(pa))
    aa = np.fromiter((p.profit for p in pa), dtype=np.int64, count=len(pa))
    wb = np.fromiter((p.weight for p in pb), dtype=np.int64, count=len(pb))
    ab = np.fromiter((p.profit for p in pb), dtype=np.int64, count=len(pb))
    w = (wa[:, None] + wb[None, :]).ravel()
    a = (aa[:, None] + ab[None, :]).ravel()
    idx = np.flatnonzero(w <= cap)
    if idx.size == 0:
        return EMPTY
    w, a = w[idx], a[idx]
    # Row-major flattening preserves the python path's first-seen order.
    order = np.lexsort((idx, -a, w))
    w, a, idx = w[order], a[order], idx[order]
    running = np.maximum.accumulate(a)
    keep = np.ones(len(a), dtype=bool)
    keep[1:] = a[1:] > running[:-1]
    nb = len(pb)
    out = []
    for wi, ai, k in zip(w[keep].tolist(), a[keep].tolist(), idx[keep].tolist()):
        out.append(WpPair(wi, ai, _union(pa[k // nb].witness, pb[k % nb].witness)))
    return ParetoSet._trusted(tuple(out))


def shift(pset: ParetoSet, weight: int, profit: int, witness: int | None = None, cap: int | None = None) -> ParetoSet:
    """Add a constant pair to every member; drop results heavier than ``cap``.

    Negative offsets are allowed (join nodes subtract double-counted bags).
    ``witness`` bits are OR-ed into carried witnesses.
    """
    out = []
    for p in pset.pairs:
        w = p.weight + weight
        if cap is not None and w > cap:
            break
        wit = p.witness if p.witness is None or witness is None else p.witness | witness
        out.append(WpPair(w, p.profit + profit, wit))
    return ParetoSet._trusted(tuple(out))


def cap_filter(pset: ParetoSet, cap: int) -> ParetoSet:
    return ParetoSet._trusted(tuple(p for p in pset.pairs if p.weight <= cap))


def best_pair(pset: ParetoSet, s: int) -> WpPair | None:
    best = None
    for p in pset.pairs:
        if p.weight > s:
            break
        best = p
    return best


def best_profit(pset: ParetoSet, s: int) -> int | None:
    p = best_pair(pset, s)
    return None if p is None else p.profit
