"""Seeded random monomial ideals for property checks.

Distributions
-------------
``random_ideal``
    The generator count is uniform on ``1..max_gens``. Each exponent is
    uniform on ``0..max_exp``, and an all-zero vector is redrawn. The result
    is minimalized, so it may have fewer generators than were drawn.
``random_squarefree_ideal``
    The same, with ``max_exp = 1``.
``random_degree2_ideal``
    With probability 1/2 it has no linear generators; otherwise it has 1 or
    2 distinct variables. Then 1..2n distinct degree-2 monomials are drawn
    uniformly from all ``x_i x_j`` with ``i <= j``, so squares are included.
    The result is minimalized.

Every function takes a :class:`random.Random`, so a fixed seed reproduces
the same ideals.
"""

from __future__ import annotations

import itertools
import random

from .core import MonomialIdeal, Ring


def random_monomial(rng: random.Random, n: int, max_exp: int):
    while True:
        m = tuple(rng.randint(0, max_exp) for _ in range(n))
        if any(m):
            return m


def random_ideal(rng: random.Random, n: int, max_gens: int, max_exp: int,
                 full_support: bool = False, ring: Ring = None) -> MonomialIdeal:
    """Random proper nonzero monomial ideal in ``n`` variables."""
    ring = ring or Ring.standard(n)
    while True:
        t = rng.randint(1, max_gens)
        I = MonomialIdeal(ring, [random_monomial(rng, n, max_exp) for _ in range(t)])
        if full_support and any(e == 0 for e in I.max_exponents):
            continue
        return I


def random_squarefree_ideal(rng: random.Random, n: int, max_gens: int, **kw) -> MonomialIdeal:
    return random_ideal(rng, n, max_gens, 1, **kw)


def random_degree2_ideal(rng: random.Random, n: int) -> MonomialIdeal:
    ring = Ring.standard(n)
    gens = []
    if rng.random() < 0.5:
        for i in rng.sample(range(n), rng.randint(1, min(2, n))):
            gens.append(ring.var(i))
    quads = []
    for i, j in itertools.combinations_with_replacement(range(n), 2):
        e = [0] * n
        e[i] += 1
        e[j] += 1
        quads.append(tuple(e))
    gens.extend(rng.sample(quads, rng.randint(1, min(2 * n, len(quads)))))
    return MonomialIdeal(ring, gens)
