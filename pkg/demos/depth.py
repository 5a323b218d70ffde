"""
Depth from multigraded Betti numbers
====================================

Betti numbers are read off the lcm lattice. Depth then comes from the
projective dimension.
"""

from monideal.core import MonomialIdeal, Ring, power
from monideal.persistence import paper_example_ideal
from monideal.resolution import betti_numbers, depth_function

R = Ring(("x", "y", "z"))
tri = MonomialIdeal(R, [(1, 1, 0), (0, 1, 1), (1, 0, 1)])
table = betti_numbers(tri)
print(table.totals())
for (i, a), b in sorted(table.entries.items()):
    print(i, R.format_monomial(a), b)
print("alternating sum:", table.euler_characteristic())

# the depth of R/I^k for the seven-variable example drops to 0 and recovers
prof = depth_function(paper_example_ideal(), 3)
print([str(d) for d in prof.values], "increases at", prof.violations)
