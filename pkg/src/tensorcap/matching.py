"""Bipartite matching, König covers and fractional perfect matchings."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping

from .graph import Graph

__all__ = [
    "BipartiteGraph",
    "max_matching",
    "min_vertex_cover",
    "bipartite_max_independent_set",
    "bipartite_double_cover",
    "has_fractional_perfect_matching",
    "is_matching",
]

_INF = float("inf")


@dataclass(frozen=True)
class BipartiteGraph:
    """Two disjoint vertex sides and, per left vertex, its right neighbours."""

    left: tuple[Hashable, ...]
    right: tuple[Hashable, ...]
    adj: Mapping[Hashable, tuple[Hashable, ...]]

    @classmethod
    def from_edges(cls, left: Iterable, right: Iterable, edges: Iterable[tuple]) -> "BipartiteGraph":
        left = tuple(left)
        right = tuple(right)
        lset, rset = set(left), set(right)
        if lset & rset:
            raise ValueError("bipartite sides must be disjoint")
        nbrs: dict = {u: [] for u in left}
        for u, v in edges:
            if u in lset and v in rset:
                nbrs[u].append(v)
            elif v in lset and u in rset:
                nbrs[v].append(u)
            else:
                raise ValueError(f"edge ({u!r}, {v!r}) does not cross the sides")
        return cls(left, right, {u: tuple(dict.fromkeys(vs)) for u, vs in nbrs.items()})

    @property
    def num_vertices(self) -> int:
        return len(self.left) + len(self.right)

    def edges(self):
        for u in self.left:
            for v in self.adj.get(u, ()):
                yield (u, v)


def max_matching(B: BipartiteGraph) -> dict:
    """Maximum matching as a ``left -> right`` dict (Hopcroft-Karp)."""
    adj = B.adj
    pair_l: dict = {u: None for u in B.left}
    pair_r: dict = {v: None for v in B.right}
    dist: dict = {}

    def bfs() -> bool:
        queue = deque()
        for u in B.left:
            if pair_l[u] is None:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        found = False
        while queue:
            u = queue.popleft()
            for v in adj.get(u, ()):
                w = pair_r[v]
                if w is None:
                    found = True
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(root) -> bool:
        # iterative layered DFS; recursion depth would track path length
        stack = [(root, iter(adj.get(root, ())))]
        path = []
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                w = pair_r[v]
                if w is None:
                    path.append((u, v))
                    for a, b in path:
                        pair_l[a] = b
                        pair_r[b] = a
                    return True
                if dist[w] == dist[u] + 1:
                    path.append((u, v))
                    stack.append((w, iter(adj.get(w, ()))))
                    advanced = True
                    break
            if not advanced:
                dist[u] = _INF
                stack.pop()
                if path:
                    path.pop()
        return False

    while bfs():
        for u in B.left:
            if pair_l[u] is None:
                dfs(u)
    return {u: v for u, v in pair_l.items() if v is not None}


def _koenig_reachable(B: BipartiteGraph, matching: dict) -> tuple[set, set]:
    # alternating reachability from unmatched left vertices
    matched_r = {v: u for u, v in matching.items()}
    zl = {u for u in B.left if u not in matching}
    zr: set = set()
    queue = deque(zl)
    while queue:
        u = queue.popleft()
        for v in B.adj.get(u, ()):
            if v in zr or matching.get(u) == v:
                continue
            zr.add(v)
            w = matched_r.get(v)
            if w is not None and w not in zl:
                zl.add(w)
                queue.append(w)
    return zl, zr


def min_vertex_cover(B: BipartiteGraph, matching: dict | None = None) -> set:
    """Minimum vertex cover via König's construction; its size equals the matching size."""
    if matching is None:
        matching = max_matching(B)
    zl, zr = _koenig_reachable(B, matching)
    return {u for u in B.left if u not in zl} | zr


def bipartite_max_independent_set(B: BipartiteGraph) -> set:
    """Complement of a minimum vertex cover."""
    cover = min_vertex_cover(B)
    return {u for u in B.left if u not in cover} | {v for v in B.right if v not in cover}


def is_matching(B: BipartiteGraph, matching: Mapping) -> bool:
    if len(set(matching.values())) != len(matching):
        return False
    return all(v in B.adj.get(u, ()) for u, v in matching.items())


def bipartite_double_cover(G: Graph) -> BipartiteGraph:
    """Vertex ``v`` becomes ``(v, 0)`` and ``(v, 1)``; edge ``uv`` becomes ``u0-v1`` and ``v0-u1``."""
    left = tuple((v, 0) for v in range(G.n))
    right = tuple((v, 1) for v in range(G.n))
    adj = {(v, 0): tuple((w, 1) for w in sorted(G.adj[v])) for v in range(G.n)}
    return BipartiteGraph(left, right, adj)


def has_fractional_perfect_matching(G: Graph) -> bool:
    """True iff some edge weighting with vertex loads <= 1 has total weight ``n/2``.

    Decided exactly: such a weighting exists iff the bipartite double cover has
    a perfect matching (halve the two copies of each matched edge).
    """
    return len(max_matching(bipartite_double_cover(G))) == G.n
