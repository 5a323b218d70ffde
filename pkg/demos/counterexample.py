"""
A square-free ideal whose associated primes do not persist
===========================================================

Eleven square-free generators in seven variables. The maximal ideal shows
up among the associated primes of the square and then disappears again.
"""

from monideal.core import colon_ideal, power
from monideal.persistence import paper_example_ideal
from monideal.primes import associated_primes_witness, maximal_ideal_associated

I = paper_example_ideal()
print(I)

# powers grow quickly but stay manageable
I2, I3 = power(I, 2), power(I, 3)
print(len(I), len(I2), len(I3))

# the witness search returns the smallest monomial w with w*m inside I^2
found, w = maximal_ideal_associated(I2)
print("m in Ass(I^2):", found, "witness:", I.ring.format_monomial(w))
print("m in Ass(I^3):", maximal_ideal_associated(I3)[0])

# the colon (I^3 : I) is strictly larger than I^2; w is one of the extras
C = colon_ideal(I3, I)
print("(I^3 : I) == I^2:", C == I2)
print("w in (I^3 : I):", w in C, " w in I^2:", w in I2)

# primes of I^2 missing from I^3
a2 = set(associated_primes_witness(I2).primes)
a3 = set(associated_primes_witness(I3).primes)
for p in sorted(a2 - a3, key=lambda p: p.vars):
    print("lost:", p)
