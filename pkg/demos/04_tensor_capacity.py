"""
Tensor capacity of cographs
===========================

The neighbourhood table on a cotree, the ratio it yields, and a numeric look
at independence ratios of powers.
"""

from tensorcap.capacity import (
    a_ratio,
    binding_from_a,
    capacity_trichotomy,
    neighborhood_profile,
    tensor_capacity_cograph,
)
from tensorcap.generators import complete_multipartite, cycle, star
from tensorcap.graph import disjoint_union
from tensorcap.oracle import graph_power, independence_ratio
from tensorcap.recognition import build_cotree

for name, G in [
    ("star K1,3", star(3)),
    ("K2,3", complete_multipartite(2, 3)),
    ("K2,2,2", complete_multipartite(2, 2, 2)),
    ("K1,1,4 + K3,3", disjoint_union(complete_multipartite(1, 1, 4), complete_multipartite(3, 3))),
]:
    T = build_cotree(G)
    P = neighborhood_profile(T)
    print(f"{name:15s} l(k) = {list(P.table)}  a = {a_ratio(P)}  capacity = {tensor_capacity_cograph(T)}")

# Above one half the capacity is 1 and the binding number follows from a.
print("binding number of K1,3:", binding_from_a(a_ratio(neighborhood_profile(build_cotree(star(3))))))

# The fractional-matching test separates capacity 1 from capacity <= 1/2 for
# any graph, cograph or not.
print("C5:", capacity_trichotomy(cycle(5)).value, " K1,3:", capacity_trichotomy(star(3)).value)

# Independence ratios of powers never decrease.
G = cycle(5)
for name, G in [("C5", cycle(5)), ("K2,2,2", complete_multipartite(2, 2, 2))]:
    print(f"i({name}^k), k=1,2:", [str(independence_ratio(graph_power(G, k))) for k in (1, 2)])
