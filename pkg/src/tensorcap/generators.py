"""Named graph families and seeded random cographs / splitgraphs.

Random instances come from a SplitMix64 stream so that a ``(family, params,
seed)`` triple always yields the same graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, complement, disjoint_union, join
from .recognition import JOIN, UNION, Cotree, CotreeNode, leaf, realize

__all__ = [
    "SplitMix64",
    "GeneratorSpec",
    "FAMILIES",
    "parse_spec",
    "generate",
    "complete",
    "complete_multipartite",
    "rook",
    "rook_complement",
    "paw",
    "cycle",
    "star",
    "path",
    "random_cotree",
    "random_cograph",
    "random_splitgraph",
]

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator (Steele, Lea & Flood)."""

    def __init__(self, seed: int = 0):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def bit(self) -> int:
        return self.next_u64() >> 63

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_multipartite(*parts: int) -> Graph:
    """Join of independent sets with the given sizes, laid out consecutively."""
    if not parts or min(parts) < 1:
        raise ValueError("complete_multipartite needs at least one part, each of size >= 1")
    g = Graph(parts[0])
    for p in parts[1:]:
        g = join(g, Graph(p))
    return g


def rook(m: int, n: int) -> Graph:
    """Rook's graph on the ``m x n`` grid; cell ``(i, j)`` is vertex ``i * n + j``."""
    if m < 1 or n < 1:
        raise ValueError("rook needs m, n >= 1")
    edges = []
    for i in range(m):
        for j in range(n):
            for j2 in range(j + 1, n):
                edges.append((i * n + j, i * n + j2))
            for i2 in range(i + 1, m):
                edges.append((i * n + j, i2 * n + j))
    return Graph(m * n, edges)


def rook_complement(m: int, n: int) -> Graph:
    return complement(rook(m, n))


def paw() -> Graph:
    """``K1 x (K2 + K1)``: vertex 0 is the apex, 1-2 the edge, 3 the pendant."""
    return join(Graph(1), disjoint_union(Graph(2, [(0, 1)]), Graph(1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(k: int) -> Graph:
    """``K_{1,k}`` with centre 0."""
    if k < 0:
        raise ValueError("star needs k >= 0")
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def random_cotree(n: int, seed: int = 0) -> Cotree:
    """Random cotree over leaves ``0 .. n-1``.

    The leaf set is split recursively into two nonempty halves of uniform
    size; labels alternate from a root label chosen by one random bit.
    """
    if n < 1:
        raise ValueError("random_cograph needs n >= 1")
    rng = SplitMix64(seed)
    labels = list(range(n))
    rng.shuffle(labels)
    root_kind = JOIN if rng.bit() else UNION

    def build(vs: list[int], kind: str) -> CotreeNode:
        if len(vs) == 1:
            return leaf(vs[0])
        cut = rng.randint(1, len(vs) - 1)
        other = UNION if kind == JOIN else JOIN
        return CotreeNode(kind, children=(build(vs[:cut], other), build(vs[cut:], other)))

    return Cotree(build(labels, root_kind), n)


def random_cograph(n: int, seed: int = 0) -> Graph:
    return realize(random_cotree(n, seed))


def random_splitgraph(n: int, p: float = 0.5, seed: int = 0) -> Graph:
    """Random clique size in ``0..n``, then each clique/independent cross pair with probability ``p``."""
    if n < 1:
        raise ValueError("random_splitgraph needs n >= 1")
    rng = SplitMix64(seed)
    c = rng.randint(0, n)
    labels = list(range(n))
    rng.shuffle(labels)
    clique, indep = labels[:c], labels[c:]
    edges = list(combinations(clique, 2))
    for u in clique:
        for v in indep:
            if rng.random() < p:
                edges.append((u, v))
    return Graph(n, edges)


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: tuple[int, ...] = ()
    seed: int = 0

    def __str__(self) -> str:
        s = self.family
        if self.params:
            s += ":" + ",".join(map(str, self.params))
        if self.family.startswith("random_"):
            s += f":seed={self.seed}"
        return s


# family -> (builder, min params, max params)
FAMILIES = {
    "complete": (lambda n: complete(n), 1, 1),
    "complete_multipartite": (complete_multipartite, 1, None),
    "rook": (rook, 2, 2),
    "rook_complement": (rook_complement, 2, 2),
    "paw": (paw, 0, 0),
    "cycle": (cycle, 1, 1),
    "star": (star, 1, 1),
    "path": (path, 1, 1),
    "random_cograph": (None, 1, 1),
    "random_splitgraph": (None, 1, 2),
}


def parse_spec(text: str) -> GeneratorSpec:
    """Parse ``family:p1,p2,...[:seed=S]``, e.g. ``rook:3,4`` or ``random_cograph:12:seed=7``."""
    fields = text.strip().split(":")
    family = fields[0]
    if family not in FAMILIES:
        raise ValueError(f"unknown graph family {family!r}")
    params: tuple[int, ...] = ()
    seed = 0
    for f in fields[1:]:
        if f.startswith("seed="):
            seed = int(f[len("seed="):])
        elif f:
            try:
                params = tuple(int(x) for x in f.split(","))
            except ValueError:
                raise ValueError(f"bad parameters {f!r} in spec {text!r}") from None
    _, lo, hi = FAMILIES[family]
    if len(params) < lo or (hi is not None and len(params) > hi):
        raise ValueError(f"family {family!r} takes {lo}..{hi if hi is not None else 'any'} parameters")
    return GeneratorSpec(family, params, seed)


def generate(spec: GeneratorSpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    if spec.family == "random_cograph":
        return random_cograph(spec.params[0], spec.seed)
    if spec.family == "random_splitgraph":
        p = spec.params[1] / 100 if len(spec.params) > 1 else 0.5
        if not 0 <= p <= 1:
            raise ValueError("random_splitgraph edge percentage must be in 0..100")
        return random_splitgraph(spec.params[0], p, spec.seed)
    builder = FAMILIES[spec.family][0]
    return builder(*spec.params)
