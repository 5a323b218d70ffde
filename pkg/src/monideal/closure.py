"""Integral closure of monomial ideals through the Newton polyhedron.

A monomial ``x^a`` is integral over ``I`` exactly when ``a`` lies in the
convex hull of the generator exponents plus the nonnegative orthant. That
membership question is an exact rational LP (:mod:`monideal.lp`).

Every minimal generator of the closure lies in the box ``0 <= a <= M``
(``M`` the componentwise maximum of generator exponents): if ``a_i > M_i``
and ``a`` is in the polyhedron, so is ``a - e_i``, because lowering a
coordinate that already exceeds every vertex keeps the inequality
``sum(lambda_j g_j) <= a`` intact.
"""

from __future__ import annotations

import functools
import itertools
from fractions import Fraction

import numpy as np

from . import _grid
from .core import MonomialIdeal, colon_ideal, divides, power
from .lp import feasible_point


def np_certificate(I: MonomialIdeal, a, scale: int = 1):
    """Weights ``lambda >= 0`` with ``sum(lambda) = scale`` and ``sum(lambda_j g_j) <= a``, or ``None``.

    The returned dict maps generator exponent tuples to positive Fractions.
    With ``scale = k`` this tests membership in the closure of ``I**k``
    without forming the power.
    """
    if I.is_zero():
        raise ValueError("the zero ideal has an empty Newton polyhedron")
    if scale < 1:
        raise ValueError("scale must be at least 1")
    a = tuple(int(e) for e in a)
    if len(a) != I.n:
        raise ValueError(f"exponent vector of length {len(a)} for a ring with {I.n} variables")
    for g in I.gens:
        if all(scale * e <= t for e, t in zip(g, a)):
            return {g: Fraction(scale)}
    rows = [i for i in range(I.n) if a[i] > 0]
    # a generator using a variable absent from a must get weight zero
    cols = [g for g in I.gens if all(g[i] == 0 or a[i] > 0 for i in range(I.n))]
    if not cols:
        return None
    k = len(rows)
    A = []
    for r, i in enumerate(rows):
        slack = [0] * k
        slack[r] = 1
        A.append([g[i] for g in cols] + slack)
    A.append([1] * len(cols) + [0] * k)
    b = [a[i] for i in rows] + [scale]
    x = feasible_point(A, b)
    if x is None:
        return None
    return {g: w for g, w in zip(cols, x) if w}


def np_contains(I: MonomialIdeal, a) -> bool:
    """Whether ``a`` lies in the Newton polyhedron of ``I`` (``x^a`` integral over ``I``)."""
    return np_certificate(I, a) is not None


def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    """Integral closure of a nonzero monomial ideal.

    Examples
    --------
    >>> from monideal.core import Ring
    >>> integral_closure(MonomialIdeal(Ring(("x", "y")), [(2, 0), (0, 2)]))
    MonomialIdeal(x^2, x*y, y^2)
    """
    if I.is_zero():
        raise ValueError("integral closure of the zero ideal is not supported")
    if I.is_unit():
        return I
    return _closure_of_power(I, 1)


def _closure_of_power(I, k):
    # minimal generators of cl(I^k) lie in the box [0, k*M]
    M = [k * m for m in I.max_exponents]
    Ik = power(I, k) if k > 1 else I
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in I.gens]
    points = sorted(itertools.product(*(range(m + 1) for m in M)), key=lambda p: (sum(p), p))
    found = []
    for a in points:
        if any(divides(f, a) for f in found):
            continue
        if a in Ik:
            found.append(a)
            continue
        supp = frozenset(i for i, e in enumerate(a) if e)
        if not any(s <= supp for s in supports):
            continue  # outside the radical
        if np_certificate(I, a, scale=k) is not None:
            found.append(a)
    return MonomialIdeal(I.ring, found)


@functools.lru_cache(maxsize=128)
def closure_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """Integral closure of ``I**k``; ``k = 0`` gives the unit ideal."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0 or I.is_unit():
        return MonomialIdeal.unit(I.ring)
    if I.is_zero():
        raise ValueError("integral closure of the zero ideal is not supported")
    return _closure_of_power(I, k)


def _maximal_nonmembers(I):
    M = I.max_exponents
    if _grid.fits(M):
        ind = I._grid(M)
        cand = ~ind
        for i in range(I.n):
            up = np.ones_like(ind)
            sl_dst = [slice(None)] * I.n
            sl_src = [slice(None)] * I.n
            sl_dst[i] = slice(0, M[i])
            sl_src[i] = slice(1, None)
            up[tuple(sl_dst)] = ind[tuple(sl_src)]
            cand &= up
        return [tuple(int(e) for e in p) for p in np.argwhere(cand)]
    out = []
    for a in itertools.product(*(range(m + 1) for m in M)):
        if I.__contains__(a):
            continue
        if all(a[i] == M[i] or (a[:i] + (a[i] + 1,) + a[i + 1:]) in I for i in range(I.n)):
            out.append(a)
    return out


def is_integrally_closed(I: MonomialIdeal) -> bool:
    """Whether ``I`` equals its integral closure.

    Membership in the closure is upward closed, so if the closure is larger
    than ``I`` then some maximal monomial of the box ``[0, M]`` outside ``I``
    is integral. Only those corners are tested.
    """
    if I.is_zero():
        raise ValueError("zero ideal")
    if I.is_unit():
        return True
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in I.gens]
    for a in _maximal_nonmembers(I):
        supp = frozenset(i for i, e in enumerate(a) if e)
        if any(s <= supp for s in supports) and np_contains(I, a):
            return False
    return True


def is_normal_up_to(I: MonomialIdeal, kmax: int):
    """Least ``k <= kmax`` with ``I**k`` not integrally closed, or ``None``."""
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    if I.is_zero():
        raise ValueError("zero ideal")
    P = I
    for k in range(1, kmax + 1):
        if k > 1:
            P = P * I
        if not is_integrally_closed(P):
            return k
    return None


def closure_colon_identity(I: MonomialIdeal, n: int, m: int) -> bool:
    """Check ``(cl(I^n) : cl(I^m)) == (cl(I^n) : I^m) == cl(I^(n-m))``.

    Both equalities always hold, so ``False`` points to a bug in the colon or
    closure code rather than a mathematical fact.
    """
    if not (n >= m >= 1):
        raise ValueError("need n >= m >= 1")
    if I.is_zero() or I.is_unit():
        raise ValueError("need a proper nonzero ideal")
    cn = closure_power(I, n)
    cm = closure_power(I, m)
    target = closure_power(I, n - m)
    return colon_ideal(cn, cm) == target and colon_ideal(cn, power(I, m)) == target
