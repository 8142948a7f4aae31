"""
Categorical products and the rook's graph
=========================================

Build small products by hand and look at their structure.
"""

from tensorcap.generators import complete, paw, rook
from tensorcap.graph import (
    categorical_product,
    complement,
    connected_components,
    find_induced_cycle5,
)

# The product of two cliques is the complement of the rook's graph: two grid
# cells are adjacent exactly when they share neither a row nor a column.
P = categorical_product(complete(3), complete(4))
print(P, "equals complement of rook(3, 4):", P == complement(rook(3, 4)))

# Products of connected bipartite graphs fall apart into two pieces.
K2 = complete(2)
print("components of K2 x K2:", connected_components(categorical_product(K2, K2)))
print("components of K3 x K2:", len(connected_components(categorical_product(complete(3), K2))))

# Cographs are perfect but their products need not be: paw x K3 has a C5.
print("induced C5 in paw x K3:", find_induced_cycle5(categorical_product(paw(), complete(3))))
