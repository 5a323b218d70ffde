"""
Integral closure via the Newton polyhedron
==========================================
"""

from monideal.closure import integral_closure, is_normal_up_to, np_certificate
from monideal.core import MonomialIdeal, Ring

R = Ring(("x", "y"))
I = MonomialIdeal(R, [(4, 0), (0, 3)])
print(integral_closure(I))

# x^2*y^2 is integral: a third of x^4 plus two thirds of y^3 lies below it
print(np_certificate(I, (2, 2)))
print(np_certificate(I, (1, 1)))  # outside the polyhedron

# (x^2, y^2) fails already at the first power; (x, y) is normal
print(is_normal_up_to(MonomialIdeal(R, [(2, 0), (0, 2)]), 3))
print(is_normal_up_to(MonomialIdeal(R, [(1, 0), (0, 1)]), 3))
