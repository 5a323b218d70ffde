import itertools
import random

import pytest
from conftest import ideals
from hypothesis import given
from hypothesis import strategies as st
from oracles import colon_gens, members_in_box, minimal_of

from monideal import core
from monideal.core import (
    ArityError,
    MonomialIdeal,
    Ring,
    RingMismatchError,
    colon_ideal,
    colon_monomial,
    contains,
    degree,
    equals,
    intersect,
    minimalize,
    multiply,
    power,
    radical,
    subset,
    support,
)
from monideal.persistence import paper_example_ideal


def ideal(ring, *gens):
    return MonomialIdeal(ring, gens)


# -- worked examples -----------------------------------------------------------

def test_minimalize_examples(xy):
    assert minimalize([(2, 0), (2, 1), (1, 1)], xy).gens == ((2, 0), (1, 1))
    assert minimalize([(1, 0), (0, 1), (1, 0)], xy).gens == ((1, 0), (0, 1))
    assert minimalize([], xy).is_zero()


def test_minimalize_rejects_arity(xy):
    with pytest.raises(ArityError):
        minimalize([(1, 0, 0)], xy)
    with pytest.raises(ValueError):
        minimalize([(-1, 0)], xy)


def test_power_examples(xy):
    assert power(ideal(xy, (1, 0), (0, 1)), 2).gens == ((2, 0), (1, 1), (0, 2))
    assert power(MonomialIdeal.zero(xy), 3).is_zero()
    with pytest.raises(ValueError):
        power(ideal(xy, (1, 0)), 0)


def test_seven_variable_square_generator_count():
    # 11 generators give 66 pairwise products; brute-force minimalization
    I = paper_example_ideal()
    prods = {tuple(a + b for a, b in zip(g, h)) for g, h in itertools.combinations_with_replacement(I.gens, 2)}
    assert len(prods) == 66
    expected = minimal_of(prods)
    assert len(expected) == 63
    assert sorted(power(I, 2).gens) == expected


def test_colon_monomial_examples(xy):
    I = ideal(xy, (2, 0), (1, 1))
    assert colon_monomial(I, (1, 0)) == ideal(xy, (1, 0), (0, 1))
    assert colon_monomial(ideal(xy, (3, 0)), (1, 0)) == ideal(xy, (2, 0))
    assert colon_monomial(I, (0, 0)) == I


def test_colon_ideal_examples(xy):
    I = ideal(xy, (2, 0), (1, 1))
    assert colon_ideal(I, ideal(xy, (1, 0))) == ideal(xy, (1, 0), (0, 1))
    assert colon_ideal(I, I).is_unit()
    with pytest.raises(ValueError):
        colon_ideal(I, MonomialIdeal.zero(xy))


def test_seven_variable_colon_differs():
    I = paper_example_ideal()
    assert colon_ideal(power(I, 3), I) != power(I, 2)


def test_intersect_examples(xy):
    assert intersect(ideal(xy, (1, 0)), ideal(xy, (0, 1))) == ideal(xy, (1, 1))
    assert intersect(ideal(xy, (1, 0)), ideal(xy, (2, 0), (0, 1))) == ideal(xy, (2, 0), (1, 1))
    I = ideal(xy, (2, 1), (0, 3))
    assert intersect(I, MonomialIdeal.unit(xy)) == I


def test_membership_examples(xy):
    I = ideal(xy, (2, 0), (1, 1))
    assert contains(I, (2, 1))
    assert not contains(I, (1, 0))
    assert equals(power(ideal(xy, (1, 0), (0, 1)), 2), ideal(xy, (2, 0), (1, 1), (0, 2)))
    assert subset(ideal(xy, (3, 0)), I) and not subset(I, ideal(xy, (3, 0)))


def test_radical_support_degree(xy):
    assert radical(ideal(xy, (2, 0), (1, 1))) == ideal(xy, (1, 0))
    assert support(paper_example_ideal()) == frozenset(range(7))
    R3 = Ring.standard(3)
    assert degree(ideal(R3, (1, 0, 0), (0, 1, 1))) == 2
    Z = MonomialIdeal.zero(xy)
    assert radical(Z).is_zero() and support(Z) == frozenset() and degree(Z) == 0


def test_ring_mismatch(xy, xyz):
    with pytest.raises(RingMismatchError):
        multiply(ideal(xy, (1, 0)), ideal(xyz, (1, 0, 0)))
    with pytest.raises(RingMismatchError):
        intersect(ideal(xy, (1, 0)), ideal(Ring(("x", "z")), (1, 0)))


def test_ring_validation():
    with pytest.raises(ValueError):
        Ring(("x", "x"))
    with pytest.raises(ValueError):
        Ring(("x", ""))
    assert Ring.standard(3).names == ("x1", "x2", "x3")


def test_overflow_is_loud(xy):
    big = core.EXPONENT_LIMIT // 2 + 1
    I = ideal(xy, (big, 0))
    with pytest.raises(OverflowError):
        multiply(I, I)


def test_zero_and_unit_behaviour(xy):
    Z, U = MonomialIdeal.zero(xy), MonomialIdeal.unit(xy)
    I = ideal(xy, (1, 2))
    assert intersect(Z, I).is_zero()
    assert multiply(U, I) == I
    assert colon_ideal(Z, I).is_zero()
    assert colon_ideal(I, U) == I
    assert U.gens == ((0, 0),) and Z.gens == ()


# -- properties ----------------------------------------------------------------

@given(ideals(), st.randoms(use_true_random=False))
def test_minimality_and_canonicity(I, rnd):
    for a, b in itertools.permutations(I.gens, 2):
        assert not core.divides(a, b)
    shuffled = list(I.gens) * 2
    rnd.shuffle(shuffled)
    assert MonomialIdeal(I.ring, shuffled).gens == I.gens
    assert list(I.gens) == sorted(I.gens, key=lambda m: (sum(m), tuple(-e for e in m)))


@given(ideals(n_max=3), st.data())
def test_colon_monomial_law(I, data):
    w = data.draw(st.tuples(*[st.integers(0, 3)] * I.n))
    C = colon_monomial(I, w)
    for m in itertools.product(range(5), repeat=I.n):
        assert contains(C, m) == contains(I, tuple(a + b for a, b in zip(m, w)))


@given(ideals(n_max=3, max_gens=4), ideals(n_max=3, max_gens=3, n=None))
def test_colon_ideal_against_brute_force(I, J):
    if J.n != I.n:
        J = MonomialIdeal(I.ring, [(1,) * I.n])
    got = colon_ideal(I, J)
    if got.is_unit():
        assert subset(J, I)
        return
    assert sorted(got.gens) == colon_gens(I.gens, J.gens, I.max_exponents)


@given(ideals(n_max=3), st.data())
def test_intersect_against_brute_force(I, data):
    J = data.draw(ideals(n=I.n))
    got = intersect(I, J)
    bounds = [max(a, b) for a, b in zip(I.max_exponents, J.max_exponents)]
    assert members_in_box(got.gens, bounds) == members_in_box(I.gens, bounds) & members_in_box(J.gens, bounds)


@given(ideals(n_max=3, max_gens=6), st.data())
def test_grid_and_generator_paths_agree(I, data):
    J = data.draw(ideals(n=I.n, max_gens=6))
    assert core._colon_ideal_grid(I, J) == core.intersect_all([colon_monomial(I, g) for g in J.gens])
    big = power(I, 3)
    assert intersect(big, power(J, 3)) == core._intersect_pairwise(big, power(J, 3))


@given(ideals(n_max=3, max_gens=3, max_exp=2), st.integers(1, 3), st.integers(1, 3))
def test_power_coherence(I, a, b):
    assert power(I, a + b) == multiply(power(I, a), power(I, b))


@given(ideals(n_max=3, max_gens=4, max_exp=2), st.integers(1, 3))
def test_containment_chain(I, k):
    if I.is_unit():
        return
    assert subset(power(I, k), colon_ideal(power(I, k + 1), I))


@given(ideals(n_max=4, max_gens=4, squarefree=True), st.integers(2, 4))
def test_squarefree_colon_identity(I, k):
    assert colon_ideal(power(I, k), power(I, k - 1)) == I


def test_larger_random_intersections_match():
    rng = random.Random(3)
    R = Ring.standard(5)
    for _ in range(10):
        I = MonomialIdeal(R, [tuple(rng.randint(0, 4) for _ in range(5)) for _ in range(30)])
        J = MonomialIdeal(R, [tuple(rng.randint(0, 4) for _ in range(5)) for _ in range(30)])
        assert intersect(I, J) == core._intersect_pairwise(I, J)
