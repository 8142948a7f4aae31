"""Tensor capacity (ultimate categorical independence ratio).

The capacity of any graph equals ``a*(G)``: the best ratio
``|I| / (|I| + |N(I)|)`` over independent sets, rounded up to 1 once it
exceeds one half. For cographs this ratio is read off a per-node table
``l(k)`` of smallest neighbourhoods of ``k``-element independent sets,
computed bottom-up on the cotree. All arithmetic is exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph
from .matching import has_fractional_perfect_matching
from .recognition import JOIN, Cotree, CotreeNode

__all__ = [
    "HALF",
    "NeighborhoodProfile",
    "CapacityKind",
    "CapacityValue",
    "ONE",
    "Trichotomy",
    "OutOfRegime",
    "min_plus",
    "neighborhood_profile",
    "a_ratio",
    "a_star",
    "tensor_capacity_cograph",
    "capacity_trichotomy",
    "binding_from_a",
]

HALF = Fraction(1, 2)


class OutOfRegime(ValueError):
    pass


@dataclass(frozen=True)
class NeighborhoodProfile:
    """``table[k]`` is the least ``|N(I)|`` over independent sets with ``|I| = k``,
    for ``k = 0 .. alpha(G)``."""

    table: tuple[int, ...]
    nvertices: int

    @property
    def alpha(self) -> int:
        return len(self.table) - 1

    def best_k(self) -> int:
        """Smallest ``k >= 1`` maximising ``k / (k + l(k))``."""
        best = 1
        for k in range(2, len(self.table)):
            # k/(k+l_k) > b/(b+l_b)  <=>  k*l_b > b*l_k
            if k * self.table[best] > best * self.table[k]:
                best = k
        return best


def min_plus(f, g):
    """``(f ⊞ g)(k) = min_{i+j=k} f(i) + g(j)``."""
    out = [None] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        for j, gj in enumerate(g):
            s = fi + gj
            if out[i + j] is None or s < out[i + j]:
                out[i + j] = s
    return out


def _join_tables(tables, sizes, n):
    # an independent set of a join lies inside one child; its neighbourhood
    # also contains every vertex outside that child
    out = [0] * max(len(t) for t in tables)
    for k in range(1, len(out)):
        out[k] = min(t[k] + n - s for t, s in zip(tables, sizes) if k < len(t))
    return out


def _profile(node: CotreeNode) -> list[int]:
    if node.is_leaf:
        return [0, 0]
    tables = [_profile(c) for c in node.children]
    if node.kind == JOIN:
        return _join_tables(tables, [c.size for c in node.children], node.size)
    acc = tables[0]
    for t in tables[1:]:
        acc = min_plus(acc, t)
    return acc


def neighborhood_profile(T: Cotree | CotreeNode) -> NeighborhoodProfile:
    node = T.root if isinstance(T, Cotree) else T
    return NeighborhoodProfile(tuple(_profile(node)), node.size)


def a_ratio(P: NeighborhoodProfile) -> Fraction:
    """``a(G) = max_{k >= 1} k / (k + l(k))``; the maximiser is ``P.best_k()``."""
    k = P.best_k()
    return Fraction(k, k + P.table[k])


class CapacityKind(enum.Enum):
    ONE = "ONE"
    RATIO = "RATIO"


@dataclass(frozen=True)
class CapacityValue:
    kind: CapacityKind
    ratio: Fraction | None = None

    def __post_init__(self):
        if self.kind is CapacityKind.RATIO and (self.ratio is None or self.ratio > HALF):
            raise ValueError("a capacity ratio is at most 1/2")

    @classmethod
    def of(cls, r: Fraction) -> "CapacityValue":
        return ONE if r > HALF else cls(CapacityKind.RATIO, Fraction(r))

    @property
    def value(self) -> Fraction:
        return Fraction(1) if self.kind is CapacityKind.ONE else self.ratio

    @property
    def is_one(self) -> bool:
        return self.kind is CapacityKind.ONE

    def __lt__(self, other: "CapacityValue") -> bool:
        return self.value < other.value

    def __le__(self, other: "CapacityValue") -> bool:
        return self.value <= other.value

    def __str__(self) -> str:
        if self.is_one:
            return "1"
        return f"{self.ratio.numerator}/{self.ratio.denominator}"


ONE = CapacityValue(CapacityKind.ONE)


def a_star(r: Fraction) -> CapacityValue:
    if not 0 < r <= 1:
        raise ValueError(f"a(G) lies in (0, 1], got {r}")
    return CapacityValue.of(r)


def tensor_capacity_cograph(T: Cotree) -> CapacityValue:
    return a_star(a_ratio(neighborhood_profile(T)))


class Trichotomy(enum.Enum):
    ONE = "ONE"
    AT_MOST_HALF = "AT_MOST_HALF"


def capacity_trichotomy(G: Graph) -> Trichotomy:
    """Capacity is 1 exactly when ``G`` has no fractional perfect matching;
    otherwise it is at most 1/2. Works for any graph."""
    if has_fractional_perfect_matching(G):
        return Trichotomy.AT_MOST_HALF
    return Trichotomy.ONE


def binding_from_a(r: Fraction) -> Fraction:
    """Binding number ``(1 - a) / a``, valid only when ``a > 1/2``."""
    r = Fraction(r)
    if r <= HALF:
        raise OutOfRegime(f"binding number relation needs a(G) > 1/2, got {r}")
    return (1 - r) / r
