"""Finite simple undirected graphs and the combinators used throughout.

Vertices are the integers ``0 .. n-1``. Graphs are immutable; every
combinator returns a new graph. In a categorical product ``G x H`` the pair
``(g, h)`` is the vertex ``g * H.n + h``.
"""

from __future__ import annotations

import warnings
from collections import deque
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "GraphFormatError",
    "categorical_product",
    "complement",
    "disjoint_union",
    "join",
    "connected_components",
    "is_bipartite",
    "bipartition",
    "find_induced_path4",
    "find_induced_cycle5",
    "is_induced_path",
    "is_induced_cycle",
    "is_independent",
    "pair_index",
    "pair_of",
    "parse_graph",
    "write_graph",
    "read_graph",
]


class GraphFormatError(ValueError):
    """Raised for malformed graph text or invalid edge lists."""


class Graph:
    """Immutable simple graph on vertices ``0 .. n-1``.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.num_edges, sorted(g.neighbors(1))
    (2, [0, 2])
    """

    __slots__ = ("_n", "_adj", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise GraphFormatError(f"graph must have at least one vertex, got n={n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._adj = tuple(frozenset(a) for a in adj)
        self._masks: tuple[int, ...] | None = None

    @classmethod
    def _from_sets(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        # trusted constructor: caller guarantees symmetry and no loops
        if not adj:
            raise GraphFormatError("graph must have at least one vertex, got n=0")
        g = cls.__new__(cls)
        g._n = len(adj)
        g._adj = tuple(frozenset(a) for a in adj)
        g._masks = None
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        return self._adj

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitmasks, bit ``v`` set for neighbor ``v``."""
        if self._masks is None:
            self._masks = tuple(sum(1 << v for v in a) for a in self._adj)
        return self._masks

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in range(self._n):
            for v in sorted(self._adj[u]):
                if u < v:
                    yield (u, v)

    def vertices(self) -> range:
        return range(self._n)

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled by position in the sequence."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph._from_sets(
            [[index[w] for w in self._adj[v] if w in index] for v in vertices]
        )

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        adj: list[list[int]] = [[] for _ in range(self._n)]
        for v in range(self._n):
            adj[perm[v]] = [perm[w] for w in self._adj[v]]
        return Graph._from_sets(adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.num_edges})"


def pair_index(g: int, h: int, n_h: int) -> int:
    return g * n_h + h


def pair_of(flat: int, n_h: int) -> tuple[int, int]:
    return divmod(flat, n_h)


def categorical_product(G: Graph, H: Graph) -> Graph:
    """Categorical (tensor) product: ``(g1,h1) ~ (g2,h2)`` iff ``g1~g2`` and ``h1~h2``."""
    nh = H.n
    adj = []
    for g in range(G.n):
        ng = G.adj[g]
        for h in range(nh):
            nbrs = H.adj[h]
            adj.append([g2 * nh + h2 for g2 in ng for h2 in nbrs])
    return Graph._from_sets(adj)


def complement(G: Graph) -> Graph:
    everything = frozenset(range(G.n))
    return Graph._from_sets([everything - a - {v} for v, a in enumerate(G.adj)])


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """``G`` on ``0 .. G.n-1`` followed by ``H`` shifted by ``G.n``; no cross edges."""
    off = G.n
    return Graph._from_sets(list(G.adj) + [[w + off for w in a] for a in H.adj])


def join(G: Graph, H: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    off = G.n
    left = set(range(off))
    right = set(range(off, off + H.n))
    adj = [set(a) | right for a in G.adj]
    adj += [{w + off for w in a} | left for a in H.adj]
    return Graph._from_sets(adj)


def _components_within(G: Graph, vertices: Iterable[int], use_complement: bool = False) -> list[list[int]]:
    # BFS restricted to `vertices`, in G or in its complement
    remaining = set(vertices)
    comps = []
    for start in sorted(remaining):
        if start not in remaining:
            continue
        remaining.discard(start)
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            if use_complement:
                nxt = [w for w in remaining if w not in G.adj[u]]
            else:
                nxt = [w for w in G.adj[u] if w in remaining]
            for w in nxt:
                remaining.discard(w)
                comp.append(w)
                queue.append(w)
        comps.append(sorted(comp))
    return comps


def connected_components(G: Graph) -> list[set[int]]:
    """Vertex sets of the components, ordered by smallest vertex."""
    return [set(c) for c in _components_within(G, range(G.n))]


def bipartition(G: Graph) -> list[int] | None:
    """Proper 2-colouring as a list of 0/1 colours, or ``None`` if an odd cycle exists."""
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(G: Graph) -> bool:
    return bipartition(G) is not None


def is_independent(G: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    return all(not (G.adj[v] & vs) for v in vs)


def is_induced_path(G: Graph, path: Sequence[int]) -> bool:
    """True iff consecutive vertices are adjacent and no other pair is."""
    k = len(path)
    if len(set(path)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            if G.has_edge(path[i], path[j]) != (j == i + 1):
                return False
    return True


def is_induced_cycle(G: Graph, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if G.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True


def find_induced_path4(G: Graph) -> tuple[int, int, int, int] | None:
    """Some induced path ``a-b-c-d``, or ``None`` when ``G`` is a cograph.

    Every induced P4 has a middle edge ``bc`` with ``a`` private to ``b`` and
    ``d`` private to ``c``, so scanning edges finds one if any exists.
    """
    adj = G.adj
    for b, c in G.edges():
        for bb, cc in ((b, c), (c, b)):
            only_b = [a for a in adj[bb] if a != cc and a not in adj[cc]]
            if not only_b:
                continue
            only_c = [d for d in adj[cc] if d != bb and d not in adj[bb]]
            for a in sorted(only_b):
                for d in sorted(only_c):
                    if d not in adj[a]:
                        return (a, bb, cc, d)
    return None


def find_induced_cycle5(G: Graph) -> tuple[int, int, int, int, int] | None:
    """Some chordless 5-cycle ``(v0, .., v4)``, or ``None``."""
    adj = G.adj
    for v0 in range(G.n):
        higher = sorted(w for w in adj[v0] if w > v0)
        for i, v1 in enumerate(higher):
            for v4 in higher[i + 1:]:
                if v4 in adj[v1]:
                    continue
                for v2 in adj[v1]:
                    if v2 <= v0 or v2 in adj[v0] or v2 in adj[v4] or v2 == v4:
                        continue
                    for v3 in adj[v2] & adj[v4]:
                        if v3 <= v0 or v3 in adj[v0] or v3 in adj[v1]:
                            continue
                        return (v0, v1, v2, v3, v4)
    return None


def parse_graph(text: str) -> Graph:
    """Parse the line format ``n <count>`` followed by ``e <u> <v>`` lines.

    ``#`` lines and blank lines are ignored. Duplicate edges are dropped with
    a warning; self-loops and out-of-range indices raise ``GraphFormatError``.
    """
    n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphFormatError(f"line {lineno}: expected header 'n <count>', got {raw!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if n < 1:
                raise GraphFormatError(f"line {lineno}: vertex count must be >= 1")
            continue
        if len(parts) != 3 or parts[0] != "e":
            raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>', got {raw!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: bad vertex index in {raw!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex index out of range in {raw!r}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            warnings.warn(f"line {lineno}: duplicate edge {key} ignored", stacklevel=2)
            continue
        seen.add(key)
        edges.append(key)
    if n is None:
        raise GraphFormatError("missing header 'n <count>'")
    return Graph(n, edges)


def write_graph(G: Graph) -> str:
    lines = [f"n {G.n}"]
    lines += [f"e {u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())
