"""Graphs, DSKP instances, and the line-oriented instance file format.

Vertex sets are plain Python ints used as bit vectors: bit ``v`` is set iff
vertex ``v`` is a member. Python ints are unbounded, so the same
representation serves small oracle enumerations and large DP witnesses.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator


class InstanceError(ValueError):
    """Raised for malformed instance text or invalid instance fields."""


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Return the sorted vertex ids set in ``mask``."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def as_mask(vertex_set) -> int:
    if isinstance(vertex_set, int):
        return vertex_set
    return mask_of(vertex_set)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise InstanceError("adjacency length does not match n")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise InstanceError(f"neighbour list of {v} is not sorted/deduplicated")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise InstanceError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise InstanceError(f"self-loop at {v}")
                if v not in self.adjacency[u]:
                    raise InstanceError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InstanceError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise InstanceError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, tuple(() for _ in range(n)))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """Closed-neighbourhood bit masks N[v]."""
        return tuple((1 << v) | mask_of(nbrs) for v, nbrs in enumerate(self.adjacency))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n

    def is_tree(self) -> bool:
        return self.n > 0 and self.m == self.n - 1 and self.is_connected()


class Variant(enum.Enum):
    PLAIN = "plain"
    EXACT_K = "exact_k"
    MINIMAL = "minimal"


@dataclass(frozen=True)
class DskpInstance:
    graph: Graph
    weights: tuple[int, ...]
    profits: tuple[int, ...]
    s: int
    d: int
    variant: Variant = Variant.PLAIN
    k: int | None = None
    # Not part of the problem; carried so files can round-trip their comments.
    comments: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        n = self.graph.n
        object.__setattr__(self, "weights", tuple(self.weights))
        object.__setattr__(self, "profits", tuple(self.profits))
        if len(self.weights) != n or len(self.profits) != n:
            raise InstanceError("weights/profits length must equal n")
        if any(w < 0 for w in self.weights) or any(a < 0 for a in self.profits):
            raise InstanceError("weights and profits must be non-negative")
        if self.s < 0 or self.d < 0:
            raise InstanceError("s and d must be non-negative")
        if self.variant is Variant.EXACT_K:
            if self.k is None or not 1 <= self.k <= n:
                raise InstanceError(f"ExactK requires 1 <= k <= n, got k={self.k}")
        elif self.k is not None:
            raise InstanceError("k is only meaningful for the ExactK variant")

    @property
    def n(self) -> int:
        return self.graph.n

    def weight_of(self, vertex_set) -> int:
        return sum(self.weights[v] for v in members(as_mask(vertex_set)))

    def profit_of(self, vertex_set) -> int:
        return sum(self.profits[v] for v in members(as_mask(vertex_set)))

    @property
    def total_profit(self) -> int:
        return sum(self.profits)

    def with_budget(self, s: int | None = None, d: int | None = None) -> DskpInstance:
        return DskpInstance(
            self.graph, self.weights, self.profits,
            self.s if s is None else s, self.d if d is None else d,
            self.variant, self.k,
        )


def is_dominating_set(g: Graph, vertex_set) -> bool:
    """Closed-neighbourhood domination: every vertex is in the set or next to it."""
    mask = as_mask(vertex_set)
    covered = 0
    for v in members(mask):
        covered |= g.closed_masks[v]
    return covered == g.full_mask


def is_minimal_dominating_set(g: Graph, vertex_set) -> bool:
    mask = as_mask(vertex_set)
    if not is_dominating_set(g, mask):
        return False
    return not any(is_dominating_set(g, mask & ~(1 << v)) for v in members(mask))


# -- text format -------------------------------------------------------------

def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InstanceError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_instance(text: str | bytes) -> DskpInstance:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    header = None
    variant, k = Variant.PLAIN, None
    vlines: dict[int, tuple[int, int]] = {}
    edges: list[tuple[int, int]] = []
    seen_edges: set[tuple[int, int]] = set()
    comments: list[str] = []

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        tok = line.split()
        kind = tok[0]
        if kind == "c":
            comments.append(line[1:].strip())
            continue
        if header is None:
            if kind != "p" or len(tok) != 6 or tok[1] != "dskp":
                raise InstanceError(f"line {lineno}: expected header 'p dskp <n> <m> <s> <d>'")
            header = _ints(tok[2:], lineno)
            if any(x < 0 for x in header):
                raise InstanceError(f"line {lineno}: header values must be non-negative")
            continue
        if kind == "p":
            raise InstanceError(f"line {lineno}: duplicate header")
        if kind == "k":
            if len(tok) != 2 or vlines or edges:
                raise InstanceError(f"line {lineno}: 'k <k>' must directly follow the header")
            variant, k = Variant.EXACT_K, _ints(tok[1:], lineno)[0]
        elif kind == "minimal":
            if len(tok) != 1 or vlines or edges:
                raise InstanceError(f"line {lineno}: 'minimal' must directly follow the header")
            variant = Variant.MINIMAL
        elif kind == "v":
            if len(tok) != 4:
                raise InstanceError(f"line {lineno}: expected 'v <id> <weight> <profit>'")
            vid, w, a = _ints(tok[1:], lineno)
            if not 0 <= vid < header[0]:
                raise InstanceError(f"line {lineno}: vertex id {vid} out of range")
            if vid in vlines:
                raise InstanceError(f"line {lineno}: duplicate vertex line for {vid}")
            if vid != len(vlines):
                raise InstanceError(f"line {lineno}: vertex lines must list ids 0..n-1 in order")
            if w < 0 or a < 0:
                raise InstanceError(f"line {lineno}: negative weight or profit")
            vlines[vid] = (w, a)
        elif kind == "e":
            if len(tok) != 3:
                raise InstanceError(f"line {lineno}: expected 'e <u> <v>'")
            u, v = _ints(tok[1:], lineno)
            if not (0 <= u < header[0] and 0 <= v < header[0]):
                raise InstanceError(f"line {lineno}: vertex id out of range in edge {u}-{v}")
            if u == v:
                raise InstanceError(f"line {lineno}: self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen_edges:
                raise InstanceError(f"line {lineno}: duplicate edge {key[0]}-{key[1]}")
            seen_edges.add(key)
            edges.append(key)
        else:
            raise InstanceError(f"line {lineno}: unknown line type {kind!r}")

    if header is None:
        raise InstanceError("missing header line 'p dskp <n> <m> <s> <d>'")
    n, m, s, d = header
    if len(vlines) != n:
        raise InstanceError(f"expected {n} vertex lines, found {len(vlines)}")
    if len(edges) != m:
        raise InstanceError(f"expected {m} edge lines, found {len(edges)}")
    graph = Graph.from_edges(n, edges)
    return DskpInstance(
        graph,
        tuple(vlines[i][0] for i in range(n)),
        tuple(vlines[i][1] for i in range(n)),
        s, d, variant, k, tuple(comments),
    )


def write_instance(inst: DskpInstance) -> str:
    """Canonical text form: comments first, then header, variant, vertices, sorted edges."""
    lines = [f"c {c}".rstrip() for c in inst.comments]
    lines.append(f"p dskp {inst.n} {inst.graph.m} {inst.s} {inst.d}")
    if inst.variant is Variant.EXACT_K:
        lines.append(f"k {inst.k}")
    elif inst.variant is Variant.MINIMAL:
        lines.append("minimal")
    lines.extend(f"v {v} {inst.weights[v]} {inst.profits[v]}" for v in range(inst.n))
    lines.extend(f"e {u} {v}" for u, v in inst.graph.edges())
    return "\n".join(lines) + "\n"


def read_instance(path) -> DskpInstance:
    with open(path, "rb") as fh:
        return parse_instance(fh.read())
