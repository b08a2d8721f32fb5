"""Tree decompositions: PACE ``.td`` I/O, validation, a heuristic, nice form."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

import networkx as nx
from networkx.algorithms.approximation import treewidth_min_degree

from .instance import Graph


class DecompositionError(ValueError):
    pass


class TdFormatError(DecompositionError):
    pass


class BagTreeError(DecompositionError):
    """The bags are not connected by a tree."""


class VertexNotCovered(DecompositionError):
    pass


class EdgeNotCovered(DecompositionError):
    pass


class OccurrenceNotConnected(DecompositionError):
    """Bags containing some vertex do not form a connected subtree."""


class NotNice(DecompositionError):
    pass


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int], ...]
    n: int

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def neighbours(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.bags]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def validate(self, g: Graph | None = None) -> None:
        """Raise a specific :class:`DecompositionError` on the first violated rule."""
        validate_td(self.bags, self.edges, self.n, g)


def _check_tree(count: int, edges, adj) -> None:
    if count == 0:
        if edges:
            raise BagTreeError("tree edges given without bags")
        return
    for i, j in edges:
        if not (0 <= i < count and 0 <= j < count) or i == j:
            raise BagTreeError(f"bad tree edge {i + 1} {j + 1}")
    if len(edges) != count - 1:
        raise BagTreeError(f"{count} bags need {count - 1} tree edges, got {len(edges)}")
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in adj[i]:
            if j not in seen:
                seen.add(j)
                queue.append(j)
    if len(seen) != count:
        raise BagTreeError("bag tree is disconnected")


def validate_td(bags, edges, n: int, g: Graph | None = None) -> None:
    if g is not None and g.n != n:
        raise DecompositionError(f"decomposition is for n={n}, graph has n={g.n}")
    adj: list[list[int]] = [[] for _ in bags]
    for i, j in edges:
        if 0 <= i < len(bags) and 0 <= j < len(bags):
            adj[i].append(j)
            adj[j].append(i)
    _check_tree(len(bags), edges, adj)

    occurrences: list[set[int]] = [set() for _ in range(n)]
    for i, bag in enumerate(bags):
        for v in bag:
            if not 0 <= v < n:
                raise VertexNotCovered(f"bag {i + 1} holds unknown vertex {v + 1}")
            occurrences[v].add(i)
    for v, occ in enumerate(occurrences):
        if not occ:
            raise VertexNotCovered(f"vertex {v + 1} is in no bag")
    if g is not None:
        for u, v in g.edges():
            if occurrences[u].isdisjoint(occurrences[v]):
                raise EdgeNotCovered(f"edge {u + 1}-{v + 1} is inside no bag")
    for v, occ in enumerate(occurrences):
        start = next(iter(occ))
        seen = {start}
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in adj[i]:
                if j in occ and j not in seen:
                    seen.add(j)
                    queue.append(j)
        if len(seen) != len(occ):
            raise OccurrenceNotConnected(f"bags holding vertex {v + 1} are not connected")


def parse_td(text: str | bytes, g: Graph | None = None) -> TreeDecomposition:
    """Read a PACE 2017 ``.td`` file; ids are 1-based on the wire."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    header = None
    bags: dict[int, frozenset[int]] = {}
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        try:
            if tok[0] == "s":
                if header is not None or len(tok) != 5 or tok[1] != "td":
                    raise TdFormatError(f"line {lineno}: expected a single 's td <bags> <width+1> <n>'")
                header = tuple(int(t) for t in tok[2:])
            elif header is None:
                raise TdFormatError(f"line {lineno}: content before 's td' header")
            elif tok[0] == "b":
                bid = int(tok[1])
                if not 1 <= bid <= header[0]:
                    raise TdFormatError(f"line {lineno}: bag id {bid} out of range")
                if bid in bags:
                    raise TdFormatError(f"line {lineno}: duplicate bag {bid}")
                verts = [int(t) - 1 for t in tok[2:]]
                if any(not 0 <= v < header[2] for v in verts):
                    raise TdFormatError(f"line {lineno}: vertex id out of range")
                bags[bid] = frozenset(verts)
            else:
                if len(tok) != 2:
                    raise TdFormatError(f"line {lineno}: expected a tree edge '<bag> <bag>'")
                edges.append((int(tok[0]) - 1, int(tok[1]) - 1))
        except ValueError as exc:
            if isinstance(exc, TdFormatError):
                raise
            raise TdFormatError(f"line {lineno}: non-integer token") from None
    if header is None:
        raise TdFormatError("missing 's td' header")
    nbags, maxbag, n = header
    if sorted(bags) != list(range(1, nbags + 1)):
        raise TdFormatError(f"expected bag lines 1..{nbags}")
    td = TreeDecomposition(tuple(bags[i] for i in range(1, nbags + 1)), tuple(edges), n)
    if nbags and td.width + 1 != maxbag:
        raise TdFormatError(f"header claims max bag size {maxbag}, bags have {td.width + 1}")
    td.validate(g)
    return td


def write_td(td: TreeDecomposition) -> str:
    lines = [f"s td {len(td.bags)} {td.width + 1 if td.bags else 0} {td.n}"]
    for i, bag in enumerate(td.bags, 1):
        lines.append(" ".join(["b", str(i)] + [str(v + 1) for v in sorted(bag)]))
    lines.extend(f"{i + 1} {j + 1}" for i, j in td.edges)
    return "\n".join(lines) + "\n"


def heuristic_td(g: Graph) -> TreeDecomposition:
    """Min-degree elimination ordering; valid but not necessarily optimal."""
    if g.n == 0:
        return TreeDecomposition((), (), 0)
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    _, tree = treewidth_min_degree(nxg)
    nodes = sorted(tree.nodes(), key=lambda b: (sorted(b), len(b)))
    index = {b: i for i, b in enumerate(nodes)}
    edges = tuple(sorted(tuple(sorted((index[a], index[b]))) for a, b in tree.edges()))
    return TreeDecomposition(tuple(frozenset(b) for b in nodes), edges, g.n)


# -- nice form ---------------------------------------------------------------

LEAF, INTRODUCE, FORGET, JOIN = "leaf", "introduce", "forget", "join"


@dataclass(frozen=True)
class NiceNode:
    kind: str
    bag: tuple[int, ...]
    children: tuple[int, ...] = ()
    vertex: int | None = None


@dataclass(frozen=True)
class NiceTreeDecomposition:
    """Nodes are stored children-before-parents; the last node is the root."""

    nodes: tuple[NiceNode, ...]
    n: int

    @property
    def root(self) -> int:
        return len(self.nodes) - 1

    @property
    def width(self) -> int:
        return max(len(nd.bag) for nd in self.nodes) - 1

    def as_td(self) -> TreeDecomposition:
        edges = tuple((c, i) for i, nd in enumerate(self.nodes) for c in nd.children)
        return TreeDecomposition(tuple(frozenset(nd.bag) for nd in self.nodes), edges, self.n)

    def validate(self, g: Graph | None = None, empty_ends: bool = False) -> None:
        for i, nd in enumerate(self.nodes):
            if list(nd.bag) != sorted(set(nd.bag)):
                raise NotNice(f"node {i}: bag not sorted")
            if any(c >= i for c in nd.children):
                raise NotNice(f"node {i}: child stored after parent")
            kids = [self.nodes[c] for c in nd.children]
            if nd.kind == LEAF:
                if kids:
                    raise NotNice(f"node {i}: leaf with children")
                if empty_ends and nd.bag:
                    raise NotNice(f"node {i}: leaf bag not empty")
            elif nd.kind == JOIN:
                if len(kids) != 2 or kids[0].bag != nd.bag or kids[1].bag != nd.bag:
                    raise NotNice(f"node {i}: join needs two children with equal bags")
            elif nd.kind in (INTRODUCE, FORGET):
                if len(kids) != 1:
                    raise NotNice(f"node {i}: {nd.kind} needs one child")
                child, here = set(kids[0].bag), set(nd.bag)
                if nd.kind == INTRODUCE:
                    ok = nd.vertex not in child and here == child | {nd.vertex}
                else:
                    ok = nd.vertex in child and here == child - {nd.vertex}
                if not ok:
                    raise NotNice(f"node {i}: bad {nd.kind} of {nd.vertex}")
            else:
                raise NotNice(f"node {i}: unknown kind {nd.kind!r}")
        parents = [0] * len(self.nodes)
        for nd in self.nodes:
            for c in nd.children:
                parents[c] += 1
        if any(p != 1 for p in parents[:-1]) or parents[-1] != 0:
            raise NotNice("node list is not a single rooted tree")
        if empty_ends and self.nodes[-1].bag:
            raise NotNice("root bag not empty")
        self.as_td().validate(g)


def make_nice(td: TreeDecomposition, root: int = 0) -> NiceTreeDecomposition:
    """Binary nice decomposition of the same width, rooted at bag ``root``.

    Leaves and the root get empty bags. Between adjacent bags vertices are
    forgotten before new ones are introduced, so no intermediate bag is
    larger than the two it connects.
    """
    nodes: list[NiceNode] = []

    def add(kind, bag, children=(), vertex=None) -> int:
        nodes.append(NiceNode(kind, tuple(sorted(bag)), tuple(children), vertex))
        return len(nodes) - 1

    def walk(top: int, src: Iterable[int], dst: Iterable[int]) -> int:
        bag = set(src)
        dst = set(dst)
        for v in sorted(bag - dst):
            bag.discard(v)
            top = add(FORGET, bag, (top,), v)
        for v in sorted(dst - bag):
            bag.add(v)
            top = add(INTRODUCE, bag, (top,), v)
        return top

    if not td.bags:
        add(LEAF, ())
        return NiceTreeDecomposition(tuple(nodes), td.n)

    adj = td.neighbours()
    order, parent = [], {root: None}
    stack = [root]
    while stack:
        t = stack.pop()
        order.append(t)
        for c in sorted(adj[t], reverse=True):
            if c not in parent:
                parent[c] = t
                stack.append(c)
    top_of: dict[int, int] = {}
    for t in reversed(order):
        kids = [c for c in adj[t] if parent.get(c) == t]
        if not kids:
            top_of[t] = walk(add(LEAF, ()), (), td.bags[t])
            continue
        tops = [walk(top_of.pop(c), td.bags[c], td.bags[t]) for c in sorted(kids)]
        cur = tops[0]
        for other in tops[1:]:
            cur = add(JOIN, td.bags[t], (cur, other))
        top_of[t] = cur
    walk(top_of[root], td.bags[root], ())
    return NiceTreeDecomposition(tuple(nodes), td.n)
