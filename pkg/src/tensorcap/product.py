"""Independence numbers of categorical products of cographs and of splitgraphs.

Both routines return an explicit maximum independent set of ``G x H`` under
the flat pair indexing ``g * H.n + h``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph
from .matching import BipartiteGraph, bipartite_max_independent_set
from .recognition import (
    JOIN,
    UNION,
    Cotree,
    CotreeNode,
    SplitPartition,
    check_split_partition,
)

__all__ = [
    "AlphaResult",
    "alpha_product_cographs",
    "alpha_product_splitgraphs",
    "verify_certificate",
    "CERTIFICATE_CHECK_CAP",
]

CERTIFICATE_CHECK_CAP = 10**6


@dataclass(frozen=True)
class AlphaResult:
    value: int
    certificate: frozenset[int] = field(repr=False)
    case_tag: str | None = None


def verify_certificate(G: Graph, H: Graph, certificate) -> bool:
    """True iff the flat-indexed vertex set is independent in ``G x H``."""
    nh = H.n
    pairs = [divmod(x, nh) for x in certificate]
    if any(not (0 <= g < G.n) for g, _ in pairs):
        return False
    by_g: dict[int, list[int]] = {}
    for g, h in pairs:
        by_g.setdefault(g, []).append(h)
    for g, hs in by_g.items():
        for g2 in G.adj[g]:
            if g2 < g or g2 not in by_g:
                continue
            others = set(by_g[g2])
            if any(H.adj[h] & others for h in hs):
                return False
    return True


def alpha_product_cographs(TG: Cotree, TH: Cotree) -> AlphaResult:
    """Exact ``alpha(G x H)`` for cographs given by their cotrees.

    Recursion over pairs of cotree nodes ``(a, b)``:

    * a single vertex against anything: the product is edgeless;
    * a union node on either side: components contribute independently, sum;
    * join nodes on both sides: an independent set lives inside one
      ``G_i x H`` or one ``G x H_j``, so take the best such block.
    """
    nh = TH.n
    memo: dict[tuple[int, int], tuple[int, tuple]] = {}

    def solve(a: CotreeNode, b: CotreeNode) -> int:
        key = (id(a), id(b))
        hit = memo.get(key)
        if hit is not None:
            return hit[0]
        if a.is_leaf or b.is_leaf:
            value, choice = a.size * b.size, ("all",)
        elif a.kind == UNION:
            value = sum(solve(c, b) for c in a.children)
            choice = ("sum_g",)
        elif b.kind == UNION:
            value = sum(solve(a, c) for c in b.children)
            choice = ("sum_h",)
        else:
            value, choice = -1, ()
            for c in a.children:
                v = solve(c, b)
                if v > value:
                    value, choice = v, ("g", c)
            for c in b.children:
                v = solve(a, c)
                if v > value:
                    value, choice = v, ("h", c)
        memo[key] = (value, choice)
        return value

    def collect(a: CotreeNode, b: CotreeNode, out: list[int]) -> None:
        stack = [(a, b)]
        while stack:
            a, b = stack.pop()
            _, choice = memo[(id(a), id(b))]
            tag = choice[0]
            if tag == "all":
                out.extend(g * nh + h for g in a.vertices for h in b.vertices)
            elif tag == "sum_g":
                stack.extend((c, b) for c in a.children)
            elif tag == "sum_h":
                stack.extend((a, c) for c in b.children)
            elif tag == "g":
                stack.append((choice[1], b))
            else:
                stack.append((a, choice[1]))

    value = _with_recursion_room(TG.n + TH.n, solve, TG.root, TH.root)
    cert: list[int] = []
    collect(TG.root, TH.root, cert)
    assert len(cert) == value
    return AlphaResult(value, frozenset(cert))


def _with_recursion_room(depth: int, fn, *args):
    import sys

    needed = 4 * depth + 200
    old = sys.getrecursionlimit()
    if needed > old:
        sys.setrecursionlimit(needed)
    try:
        return fn(*args)
    finally:
        sys.setrecursionlimit(old)


def _mis(left: list[int], right: list[int], G: Graph, H: Graph) -> set[int]:
    """Maximum independent set of ``G x H`` induced on ``left ∪ right``.

    Each side must itself be independent in ``G x H``.
    """
    nh = H.n
    rset = set(right)
    adj = {}
    for x in left:
        g, h = divmod(x, nh)
        adj[x] = tuple(g2 * nh + h2 for g2 in G.adj[g] for h2 in H.adj[h] if g2 * nh + h2 in rset)
    return bipartite_max_independent_set(BipartiteGraph(tuple(left), tuple(right), adj))


def alpha_product_splitgraphs(
    G: Graph, PG: SplitPartition, H: Graph, PH: SplitPartition
) -> AlphaResult:
    """Exact ``alpha(G x H)`` for splitgraphs with partitions ``{S1, C1}``, ``{S2, C2}``.

    Any two vertices of ``C1 x C2`` are adjacent unless they share a row or a
    column, which gives three cases:

    A. no vertex of ``C1 x C2``: the rest splits into the bipartite graph on
       ``S1 x C2`` versus ``C1 x S2`` plus the isolated block ``S1 x S2``;
    B. exactly one ``(c1, c2)``: case A with its neighbours removed;
    C. two or more, all in row ``c1`` (or column ``c2``): a bipartite graph
       with ``(C1 x S2) ∪ (S1 x S2)`` on one side and the row together with
       the ``S1 x C2`` vertices outside ``N(c1)`` on the other.

    ``case_tag`` names the case attaining the maximum, earliest case on ties.
    """
    check_split_partition(G, PG)
    check_split_partition(H, PH)
    nh = H.n
    S1, C1 = sorted(PG.S), sorted(PG.C)
    S2, C2 = sorted(PH.S), sorted(PH.C)
    SC = [s * nh + c for s in S1 for c in C2]
    CS = [c * nh + s for c in C1 for s in S2]
    SS = [s * nh + t for s in S1 for t in S2]

    # case A
    best = _mis(SC, CS, G, H) | set(SS)
    tag = "A"

    # case B
    for c1 in C1:
        for c2 in C2:
            centre = c1 * nh + c2
            blocked = {g * nh + h for g in G.adj[c1] for h in H.adj[c2]}
            left = [x for x in SC if x not in blocked]
            right = [x for x in CS if x not in blocked]
            cand = _mis(left, right, G, H)
            cand |= {x for x in SS if x not in blocked}
            cand.add(centre)
            if len(cand) > len(best):
                best, tag = cand, "B"

    # case C, rows then columns
    cs_ss = CS + SS
    for c1 in C1:
        W = [s * nh + c for s in S1 if s not in G.adj[c1] for c in C2]
        row = [c1 * nh + c for c in C2]
        cand = _mis(cs_ss, W + row, G, H)
        if len(cand) > len(best):
            best, tag = cand, "C"
    sc_ss = SC + SS
    for c2 in C2:
        W = [c * nh + t for c in C1 for t in S2 if t not in H.adj[c2]]
        col = [c * nh + c2 for c in C1]
        cand = _mis(sc_ss, W + col, G, H)
        if len(cand) > len(best):
            best, tag = cand, "C"

    if G.n * H.n <= CERTIFICATE_CHECK_CAP:
        assert verify_certificate(G, H, best)
    return AlphaResult(len(best), frozenset(best), tag)
