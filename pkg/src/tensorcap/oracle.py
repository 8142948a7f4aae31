"""Exhaustive reference computations for small graphs.

These are deliberately independent of the cotree and splitgraph machinery and
serve as ground truth in the test suite.
"""

from __future__ import annotations

from fractions import Fraction

from .graph import Graph, categorical_product

__all__ = [
    "TooLarge",
    "ALPHA_CAP",
    "A_CAP",
    "A_BUDGET",
    "POWER_CAP",
    "brute_alpha",
    "brute_max_independent_set",
    "brute_a",
    "brute_a_star",
    "brute_profile",
    "independence_ratio",
    "graph_power",
]

ALPHA_CAP = 40
A_CAP = 20
A_BUDGET = 1 << 21
POWER_CAP = 10**6


class TooLarge(ValueError):
    pass


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _clique_cover_bound(cand: int, masks) -> int:
    # greedy colouring of the complement: each class is a clique, so the
    # number of classes bounds the independence number of `cand`
    classes = 0
    rest = cand
    while rest:
        classes += 1
        clique = rest
        members = 0
        while clique:
            v = (clique & -clique).bit_length() - 1
            members |= 1 << v
            clique &= masks[v]
        rest &= ~members
    return classes


def brute_max_independent_set(G: Graph) -> frozenset[int]:
    """A maximum independent set by branch and bound (``n <= 40``)."""
    if G.n > ALPHA_CAP:
        raise TooLarge(f"brute_alpha is capped at {ALPHA_CAP} vertices, got {G.n}")
    masks = G.masks
    best_size = 0
    best_set = 0

    def search(cand: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_set
        # take vertices of degree <= 1 inside cand greedily; this is always safe
        while True:
            forced = 0
            probe = cand
            while probe:
                low = probe & -probe
                v = low.bit_length() - 1
                probe ^= low
                if _popcount(masks[v] & cand) <= 1:
                    forced = v + 1
                    break
            if not forced:
                break
            v = forced - 1
            chosen |= 1 << v
            size += 1
            cand &= ~((1 << v) | masks[v])
        if not cand:
            if size > best_size:
                best_size, best_set = size, chosen
            return
        if size + _clique_cover_bound(cand, masks) <= best_size:
            return
        pivot = max(_bits(cand), key=lambda v: _popcount(masks[v] & cand))
        search(cand & ~((1 << pivot) | masks[pivot]), chosen | (1 << pivot), size + 1)
        search(cand & ~(1 << pivot), chosen, size)

    search((1 << G.n) - 1, 0, 0)
    return frozenset(_bits(best_set))


def brute_alpha(G: Graph) -> int:
    return len(brute_max_independent_set(G))


def independence_ratio(G: Graph) -> Fraction:
    return Fraction(brute_alpha(G), G.n)


def _twin_classes(G: Graph) -> list[list[int]]:
    # false twins share an open neighbourhood and are never adjacent
    groups: dict[int, list[int]] = {}
    for v in range(G.n):
        groups.setdefault(G.masks[v], []).append(v)
    return list(groups.values())


def _independent_sets_over_classes(G: Graph, budget: int):
    """Yield ``(size, neighbourhood_mask, members_mask)`` for every nonempty
    independent set that is a union of false-twin classes."""
    classes = _twin_classes(G)
    k = len(classes)
    weight = [len(c) for c in classes]
    nbr = [G.masks[c[0]] for c in classes]
    members = [sum(1 << v for v in c) for c in classes]
    conflict = [0] * k
    for i in range(k):
        for j in range(k):
            if nbr[i] & members[j]:
                conflict[i] |= 1 << j

    stack = [(0, 0, 0, 0, 0)]  # next class, size, nbhd, members, blocked classes
    while stack:
        i, size, nb, mem, blocked = stack.pop()
        if i == k:
            if size:
                budget -= 1
                if budget < 0:
                    raise TooLarge("exhaustive a(G) exceeded its enumeration budget")
                yield size, nb, mem
            continue
        stack.append((i + 1, size, nb, mem, blocked))
        if not (blocked >> i) & 1:
            stack.append((i + 1, size + weight[i], nb | nbr[i], mem | members[i], blocked | conflict[i]))


def brute_a(G: Graph, budget: int = A_BUDGET) -> tuple[Fraction, frozenset[int]]:
    """``max |I| / (|I| + |N(I)|)`` over nonempty independent sets, with a maximiser.

    Adding a false twin to ``I`` keeps ``N(I)`` and grows ``I``, so the search
    ranges over unions of twin classes only; it is exhaustive over those.
    Raises ``TooLarge`` once more than ``budget`` such sets have been seen.
    """
    best = Fraction(0)
    best_set = 0
    for size, nb, mem in _independent_sets_over_classes(G, budget):
        r = Fraction(size, size + _popcount(nb))
        if r > best:
            best, best_set = r, mem
    return best, frozenset(_bits(best_set))


def brute_a_star(G: Graph, budget: int = A_BUDGET) -> Fraction:
    a, _ = brute_a(G, budget)
    return Fraction(1) if a > Fraction(1, 2) else a


def brute_profile(G: Graph) -> list[int]:
    """``l(k) = min |N(I)|`` over independent ``I`` with ``|I| = k``, for ``k = 0 .. alpha``.

    Plain enumeration over all vertex subsets' independent sets (``n <= 20``).
    """
    if G.n > A_CAP:
        raise TooLarge(f"brute_profile is capped at {A_CAP} vertices, got {G.n}")
    masks = G.masks
    best: dict[int, int] = {0: 0}

    def rec(v: int, size: int, nb: int, forbidden: int) -> None:
        if v == G.n:
            c = _popcount(nb)
            if c < best.get(size, G.n + 1):
                best[size] = c
            return
        rec(v + 1, size, nb, forbidden)
        if not (forbidden >> v) & 1:
            rec(v + 1, size + 1, nb | masks[v], forbidden | masks[v])

    rec(0, 0, 0, 0)
    return [best[k] for k in range(max(best) + 1)]


def graph_power(G: Graph, k: int) -> Graph:
    """``G x G x ... x G`` (``k`` factors), left-associated."""
    if k < 1:
        raise ValueError("power must be at least 1")
    if G.n**k > POWER_CAP:
        raise TooLarge(f"G^{k} would have {G.n ** k} vertices (cap {POWER_CAP})")
    P = G
    for _ in range(k - 1):
        P = categorical_product(P, G)
    return P
