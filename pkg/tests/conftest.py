from itertools import combinations, permutations

import pytest

from tensorcap.graph import Graph


def isomorphic(G: Graph, H: Graph) -> bool:
    """Brute-force isomorphism test, for tiny graphs only."""
    if G.n != H.n or G.num_edges != H.num_edges:
        return False
    if sorted(map(len, G.adj)) != sorted(map(len, H.adj)):
        return False
    target = set(H.edges())
    for perm in permutations(range(G.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in target for u, v in G.edges()):
            return True
    return False


def all_graphs(n: int):
    """Every labelled graph on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    return Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def is_connected(G: Graph) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        for w in G.adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == G.n


@pytest.fixture
def iso():
    return isomorphic


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
