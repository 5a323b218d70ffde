"""
Squares of cover ideals
=======================

The square of a graph's cover ideal splits into one component per edge and
one per induced odd cycle.
"""

import random

from monideal.core import contains, intersect_all, power
from monideal.graphs import (
    cover_ideal,
    cycle_graph,
    fhv_components,
    fhv_square_decomposition,
    induced_odd_cycles,
    petersen_graph,
    random_graph,
    verify_p1,
)

# the triangle: x1*x2*x3 satisfies every edge component but not J^2
T = cycle_graph(3)
J2 = power(cover_ideal(T), 2)
edges_only = intersect_all(fhv_components(T)[:3])
print(contains(edges_only, (1, 1, 1)), contains(J2, (1, 1, 1)))

# Petersen: five-cycles are induced, so they contribute components
P = petersen_graph()
print(len(induced_odd_cycles(P)), "induced odd cycles")
print(fhv_square_decomposition(P) == power(cover_ideal(P), 2))

# a handful of random graphs
rng = random.Random(3)
for _ in range(5):
    G = random_graph(rng.randint(3, 7), 0.5, rng)
    r = verify_p1(G)
    print(G.vertex_count, len(G.edges), fhv_square_decomposition(G) == power(cover_ideal(G), 2), r.closed, r.colon_ok)
