"""Independence numbers of categorical graph products and tensor capacity.

Exact algorithms for ``alpha(G x H)`` when both factors are cographs or both
are splitgraphs, the tensor capacity of cographs, and brute-force oracles for
checking all of it on small instances.
"""

from .graph import (
    Graph,
    GraphFormatError,
    categorical_product,
    complement,
    connected_components,
    disjoint_union,
    find_induced_cycle5,
    find_induced_path4,
    is_bipartite,
    join,
    parse_graph,
    write_graph,
)
from .recognition import (
    Cotree,
    NotCograph,
    NotSplit,
    InvalidPartition,
    SplitPartition,
    build_cotree,
    realize,
    split_partition,
)
from .matching import (
    BipartiteGraph,
    bipartite_max_independent_set,
    has_fractional_perfect_matching,
    max_matching,
)
from .product import AlphaResult, alpha_product_cographs, alpha_product_splitgraphs
from .capacity import (
    ONE,
    CapacityValue,
    NeighborhoodProfile,
    OutOfRegime,
    Trichotomy,
    a_ratio,
    a_star,
    binding_from_a,
    capacity_trichotomy,
    neighborhood_profile,
    tensor_capacity_cograph,
)
from .oracle import TooLarge, brute_a, brute_alpha, graph_power, independence_ratio
from .generators import GeneratorSpec, generate, parse_spec

__version__ = "0.1.0"
