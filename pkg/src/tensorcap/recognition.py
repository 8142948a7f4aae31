"""Cograph and splitgraph recognition.

Cographs are decomposed into a cotree by repeatedly splitting on components
(a union node) or co-components (a join node). When neither split is possible
on a set of two or more vertices, that set induces a P4 and the P4 is returned
as a refutation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .graph import (
    Graph,
    _components_within,
    find_induced_path4,
    is_induced_path,
    join,
    disjoint_union,
)

__all__ = [
    "LEAF",
    "UNION",
    "JOIN",
    "CotreeNode",
    "Cotree",
    "NotCograph",
    "build_cotree",
    "realize",
    "is_cograph",
    "leaf",
    "union_node",
    "join_node",
    "cotree_term",
    "parse_cotree",
    "SplitPartition",
    "NotSplit",
    "InvalidPartition",
    "split_partition",
    "all_split_partitions",
    "is_split",
    "check_split_partition",
]

LEAF = "leaf"
UNION = "+"
JOIN = "x"


@dataclass(frozen=True, eq=False)
class CotreeNode:
    kind: str
    vertex: int | None = None
    children: tuple["CotreeNode", ...] = ()
    size: int = field(init=False)
    vertices: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if self.kind == LEAF:
            if self.vertex is None or self.children:
                raise ValueError("a leaf carries exactly one vertex and no children")
            verts: tuple[int, ...] = (self.vertex,)
        else:
            if self.kind not in (UNION, JOIN):
                raise ValueError(f"unknown cotree label {self.kind!r}")
            if len(self.children) < 2:
                raise ValueError("internal cotree nodes need at least two children")
            verts = tuple(sorted(v for c in self.children for v in c.vertices))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "size", len(verts))

    @property
    def is_leaf(self) -> bool:
        return self.kind == LEAF

    def walk(self) -> Iterator["CotreeNode"]:
        yield self
        for c in self.children:
            yield from c.walk()


def leaf(v: int) -> CotreeNode:
    return CotreeNode(LEAF, vertex=v)


def union_node(*children: CotreeNode) -> CotreeNode:
    return CotreeNode(UNION, children=tuple(children))


def join_node(*children: CotreeNode) -> CotreeNode:
    return CotreeNode(JOIN, children=tuple(children))


@dataclass(frozen=True, eq=False)
class Cotree:
    """A cotree for a graph on ``n`` vertices, leaves labelled ``0 .. n-1``."""

    root: CotreeNode
    n: int

    def __post_init__(self):
        if self.root.vertices != tuple(range(self.n)):
            raise ValueError("cotree leaves must be exactly the vertices 0..n-1")

    def is_canonical(self) -> bool:
        """No internal node has a child with the same label."""
        return all(
            c.kind != node.kind
            for node in self.root.walk()
            if not node.is_leaf
            for c in node.children
        )

    def __str__(self) -> str:
        return cotree_term(self.root)


class NotCograph(ValueError):
    """The graph contains an induced P4, given as ``witness``."""

    def __init__(self, witness: tuple[int, int, int, int]):
        super().__init__(f"not a cograph: induced P4 {witness}")
        self.witness = witness


def build_cotree(G: Graph) -> Cotree:
    """Canonical cotree of ``G``; raises ``NotCograph`` with a verified P4 otherwise.

    Children are ordered by their smallest vertex.
    """

    def decompose(vs: list[int]) -> CotreeNode:
        if len(vs) == 1:
            return leaf(vs[0])
        comps = _components_within(G, vs)
        if len(comps) > 1:
            return CotreeNode(UNION, children=tuple(decompose(c) for c in comps))
        cocomps = _components_within(G, vs, use_complement=True)
        if len(cocomps) > 1:
            return CotreeNode(JOIN, children=tuple(decompose(c) for c in cocomps))
        # connected and co-connected on >= 2 vertices: an induced P4 exists here
        sub = G.induced_subgraph(vs)
        p4 = find_induced_path4(sub)
        assert p4 is not None, "connected, co-connected graph without P4"
        witness = tuple(vs[i] for i in p4)
        assert is_induced_path(G, witness)
        raise NotCograph(witness)

    return Cotree(decompose(list(range(G.n))), G.n)


def is_cograph(G: Graph) -> bool:
    return find_induced_path4(G) is None


def _realize_node(node: CotreeNode, adj: list[set[int]]) -> None:
    if node.is_leaf:
        return
    for c in node.children:
        _realize_node(c, adj)
    if node.kind == JOIN:
        for a, b in combinations(node.children, 2):
            for u in a.vertices:
                adj[u].update(b.vertices)
            for v in b.vertices:
                adj[v].update(a.vertices)


def realize(T: Cotree | CotreeNode) -> Graph:
    """The graph a cotree describes. A bare node must have leaves ``0 .. k-1``."""
    root = T.root if isinstance(T, Cotree) else T
    n = root.size
    if root.vertices != tuple(range(n)):
        raise ValueError("cotree leaves must be exactly the vertices 0..n-1")
    adj: list[set[int]] = [set() for _ in range(n)]
    _realize_node(root, adj)
    return Graph._from_sets(adj)


def realize_subtree(node: CotreeNode) -> Graph:
    """Graph of a subtree, with its leaves relabelled ``0 .. size-1`` in sorted order."""
    if node.is_leaf:
        return Graph(1)
    parts = [realize_subtree(c) for c in node.children]
    combine = join if node.kind == JOIN else disjoint_union
    g = parts[0]
    for p in parts[1:]:
        g = combine(g, p)
    # combinators lay children out consecutively; map back to sorted leaf order
    order = [v for c in node.children for v in c.vertices]
    rank = {v: i for i, v in enumerate(node.vertices)}
    return g.relabel([rank[v] for v in order])


def cotree_term(node: CotreeNode) -> str:
    """Parenthesised form, e.g. ``(x 0 (+ (x 1 2) 3))``."""
    if node.is_leaf:
        return str(node.vertex)
    return "(" + node.kind + " " + " ".join(cotree_term(c) for c in node.children) + ")"


def parse_cotree(text: str) -> Cotree:
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse() -> CotreeNode:
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("unexpected end of cotree term")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            if pos >= len(tokens) or tokens[pos] not in (UNION, JOIN):
                raise ValueError("expected '+' or 'x' after '('")
            kind = tokens[pos]
            pos += 1
            children = []
            while pos < len(tokens) and tokens[pos] != ")":
                children.append(parse())
            if pos >= len(tokens):
                raise ValueError("unbalanced parentheses in cotree term")
            pos += 1
            return CotreeNode(kind, children=tuple(children))
        if tok == ")":
            raise ValueError("unexpected ')'")
        return leaf(int(tok))

    root = parse()
    if pos != len(tokens):
        raise ValueError("trailing tokens after cotree term")
    return Cotree(root, root.size)


# -- split graphs ----------------------------------------------------------


@dataclass(frozen=True)
class SplitPartition:
    """``C`` induces a clique, ``S`` an independent set."""

    S: frozenset[int]
    C: frozenset[int]


class NotSplit(ValueError):
    pass


class InvalidPartition(ValueError):
    pass


def check_split_partition(G: Graph, P: SplitPartition) -> None:
    """Raise ``InvalidPartition`` unless ``P`` is a split partition of ``G``."""
    if P.S & P.C or (P.S | P.C) != frozenset(range(G.n)):
        raise InvalidPartition("S and C must partition the vertex set")
    for u, v in combinations(sorted(P.C), 2):
        if not G.has_edge(u, v):
            raise InvalidPartition(f"C is not a clique: {u} and {v} are non-adjacent")
    for v in P.S:
        if G.adj[v] & P.S:
            raise InvalidPartition(f"S is not independent at vertex {v}")


def _valid(G: Graph, C: frozenset[int]) -> bool:
    S = frozenset(range(G.n)) - C
    return all(G.adj[v] >= C - {v} for v in C) and all(not (G.adj[v] & S) for v in S)


def _hammer_simeone(G: Graph) -> frozenset[int] | None:
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    deg = [G.degree(v) for v in order]
    m = max(i for i in range(1, G.n + 1) if deg[i - 1] >= i - 1)
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None
    return frozenset(order[:m])


def all_split_partitions(G: Graph) -> list[SplitPartition]:
    """Every split partition of ``G``; empty when ``G`` is not split.

    A clique meets an independent set in at most one vertex, so every valid
    clique side differs from any one valid clique side by at most one vertex
    removed and one added.
    """
    C0 = _hammer_simeone(G)
    if C0 is None:
        return []
    everything = frozenset(range(G.n))
    candidates = {C0}
    for x in [None, *C0]:
        base = C0 - {x} if x is not None else C0
        for y in [None, *(everything - C0)]:
            candidates.add(base | {y} if y is not None else base)
    found = [C for C in candidates if _valid(G, C)]
    found.sort(key=lambda C: (-len(C), sorted(C)))
    return [SplitPartition(S=everything - C, C=C) for C in found]


def split_partition(G: Graph) -> SplitPartition:
    """Split partition with the largest clique side, ties to the lexicographically smallest.

    Raises ``NotSplit`` when no partition exists.
    """
    parts = all_split_partitions(G)
    if not parts:
        raise NotSplit("graph is not a splitgraph")
    return parts[0]


def is_split(G: Graph) -> bool:
    return _hammer_simeone(G) is not None
