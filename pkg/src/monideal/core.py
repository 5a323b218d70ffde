"""Monomials, polynomial rings and canonical monomial ideals.

Monomials are plain tuples of non-negative exponents. A
:class:`MonomialIdeal` always stores its minimal generating set in graded
lexicographic order, so two ideals are equal exactly when their generator
tuples coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

from . import _grid

Monomial = tuple  # tuple[int, ...]

# Exponents live in int64 arrays; refuse anything that could wrap.
EXPONENT_LIMIT = 2**62


class RingMismatchError(ValueError):
    """Operands live in different rings."""


class ArityError(ValueError):
    """A monomial has the wrong number of exponents for its ring."""


@dataclass(frozen=True)
class Ring:
    """A polynomial ring over an unspecified field, identified by its variable names."""

    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if any(not isinstance(s, str) or not s for s in names):
            raise ValueError("variable names must be non-empty strings")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @classmethod
    def standard(cls, n: int, prefix: str = "x") -> "Ring":
        """The ring ``K[x1, ..., xn]``."""
        if n < 1:
            raise ValueError("n must be positive")
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def one(self) -> Monomial:
        return (0,) * self.n

    def var(self, i: int) -> Monomial:
        """The variable with 0-based index ``i`` as a monomial."""
        e = [0] * self.n
        e[i] = 1
        return tuple(e)

    def subring(self, indices: Iterable[int]) -> "Ring":
        return Ring(tuple(self.names[i] for i in sorted(indices)))

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def degree_of(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    out = tuple(x + y for x, y in zip(a, b))
    if any(e >= EXPONENT_LIMIT for e in out):
        raise OverflowError("exponent overflow")
    return out


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """``a / gcd(a, b)``."""
    return tuple(x - min(x, y) for x, y in zip(a, b))


def squarefree_part(m: Monomial) -> Monomial:
    return tuple(1 if e else 0 for e in m)


def _grlex_key(m):
    return (sum(m), tuple(-e for e in m))


def _check_monomial(m, n):
    m = tuple(int(e) for e in m)
    if len(m) != n:
        raise ArityError(f"monomial {m} has {len(m)} exponents, ring has {n} variables")
    if any(e < 0 for e in m):
        raise ValueError(f"negative exponent in {m}")
    if any(e >= EXPONENT_LIMIT for e in m):
        raise OverflowError("exponent overflow")
    return m


def _minimal_tuples(cands):
    """Minimal elements under divisibility of a set of distinct exponent tuples."""
    cands = sorted(set(cands), key=_grlex_key)
    if len(cands) <= 48:
        kept = []
        for c in cands:
            if not any(divides(k, c) for k in kept):
                kept.append(c)
        return kept
    arr = np.asarray(cands, dtype=np.int64)
    N, n = arr.shape
    chunk = max(1, 20_000_000 // max(1, N * n))
    keep = np.empty(N, dtype=bool)
    for start in range(0, N, chunk):
        block = arr[start:start + chunk]
        below = (arr[None, :, :] <= block[:, None, :]).all(axis=2)
        # each candidate divides itself exactly once (inputs are distinct)
        keep[start:start + chunk] = below.sum(axis=1) == 1
    return [cands[i] for i in np.flatnonzero(keep)]


class MonomialIdeal:
    """A monomial ideal stored by its canonical minimal generators.

    Parameters
    ----------
    ring : Ring
        Ambient polynomial ring.
    gens : iterable of tuple of int
        Any generating set; it is minimalized and sorted on construction.

    Examples
    --------
    >>> R = Ring(("x", "y"))
    >>> MonomialIdeal(R, [(2, 0), (2, 1), (1, 1)])
    MonomialIdeal(x^2, x*y)
    """

    def __init__(self, ring: Ring, gens: Iterable[Sequence[int]] = (), *, _trusted=False):
        self.ring = ring
        if _trusted:
            self.gens = tuple(gens)
        else:
            checked = [_check_monomial(g, ring.n) for g in gens]
            self.gens = tuple(_minimal_tuples(checked))

    # constructors -----------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring) -> "MonomialIdeal":
        return cls(ring, (), _trusted=True)

    @classmethod
    def unit(cls, ring: Ring) -> "MonomialIdeal":
        return cls(ring, (ring.one(),), _trusted=True)

    @classmethod
    def maximal(cls, ring: Ring) -> "MonomialIdeal":
        return cls(ring, [ring.var(i) for i in range(ring.n)])

    @classmethod
    def from_array(cls, ring: Ring, arr) -> "MonomialIdeal":
        return cls(ring, [tuple(int(e) for e in row) for row in np.asarray(arr)])

    # basic predicates -------------------------------------------------

    @property
    def n(self) -> int:
        return self.ring.n

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.gens, dtype=np.int64).reshape(len(self.gens), self.ring.n)

    @cached_property
    def max_exponents(self) -> tuple:
        """Componentwise maximum of the generator exponents."""
        if not self.gens:
            return (0,) * self.n
        return tuple(int(e) for e in self.array.max(axis=0))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == (self.ring.one(),)

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self.gens == other.gens

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __repr__(self):
        if self.is_zero():
            return "MonomialIdeal(0)"
        body = ", ".join(self.ring.format_monomial(g) for g in self.gens)
        return f"MonomialIdeal({body})"

    def __contains__(self, m):
        return contains(self, m)

    def __mul__(self, other):
        return multiply(self, other)

    def __pow__(self, k):
        return power(self, k)

    def __and__(self, other):
        return intersect(self, other)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __le__(self, other):
        return subset(self, other)

    def _grid(self, bounds):
        return _grid.upset(self.gens, bounds)


def _same_ring(*ideals):
    ring = ideals[0].ring
    for J in ideals[1:]:
        if J.ring != ring:
            raise RingMismatchError(f"{ring.names} vs {J.ring.names}")
    return ring


def minimalize(gens: Iterable[Sequence[int]], ring: Ring) -> MonomialIdeal:
    """Ideal generated by ``gens``: redundant generators dropped, canonical order."""
    return MonomialIdeal(ring, gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ring = _same_ring(I, J)
    return MonomialIdeal(ring, I.gens + J.gens)


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ring = _same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return MonomialIdeal.zero(ring)
    A, B = I.array, J.array
    if int(A.max(initial=0)) + int(B.max(initial=0)) >= EXPONENT_LIMIT:
        raise OverflowError("exponent overflow in product")
    prods = (A[:, None, :] + B[None, :, :]).reshape(-1, ring.n)
    cands = {tuple(int(e) for e in row) for row in prods}
    return MonomialIdeal(ring, _minimal_tuples(cands), _trusted=True)


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """``I**k`` for ``k >= 1`` by repeated multiplication with minimalization."""
    if k < 1:
        raise ValueError("power needs k >= 1; the unit ideal convention is left to callers")
    result = I
    for _ in range(k - 1):
        result = multiply(result, I)
    return result


def contains(I: MonomialIdeal, m: Sequence[int]) -> bool:
    m = _check_monomial(m, I.n)
    return any(divides(g, m) for g in I.gens)


def subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_ring(I, J)
    return all(any(divides(h, g) for h in J.gens) for g in I.gens)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_ring(I, J)
    return I.gens == J.gens


def colon_monomial(I: MonomialIdeal, w: Sequence[int]) -> MonomialIdeal:
    """``(I : w)``, generated by ``g / gcd(g, w)`` over the generators ``g``."""
    w = _check_monomial(w, I.n)
    return MonomialIdeal(I.ring, [quotient(g, w) for g in I.gens])


def _intersect_pairwise(I, J):
    cands = {lcm(a, b) for a in I.gens for b in J.gens}
    return MonomialIdeal(I.ring, _minimal_tuples(cands), _trusted=True)


def _from_points(ring, pts):
    return MonomialIdeal(ring, [tuple(int(e) for e in p) for p in pts])


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``I ∩ J``; pairwise lcms of generators, or a grid sweep when the box is small."""
    ring = _same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return MonomialIdeal.zero(ring)
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    if len(I) * len(J) <= 256:
        return _intersect_pairwise(I, J)
    bounds = tuple(max(a, b) for a, b in zip(I.max_exponents, J.max_exponents))
    if not _grid.fits(bounds):
        return _intersect_pairwise(I, J)
    ind = I._grid(bounds) & J._grid(bounds)
    return _from_points(ring, _grid.minimal_points(ind))


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    if not ideals:
        raise ValueError("empty intersection")
    return reduce(intersect, ideals)


def _colon_ideal_grid(I, J):
    bounds = I.max_exponents
    base = I._grid(bounds)
    ind = np.ones_like(base)
    for g in J.gens:
        ind &= _grid.shift_down(base, g)
    return _from_points(I.ring, _grid.minimal_points(ind))


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``(I : J)``, the intersection of ``(I : g)`` over the generators ``g`` of ``J``.

    Raises
    ------
    ValueError
        If ``J`` is the zero ideal.
    """
    ring = _same_ring(I, J)
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    if I.is_zero():
        return MonomialIdeal.zero(ring)
    if subset(J, I):
        return MonomialIdeal.unit(ring)
    # every minimal generator of (I : J) lies in the box [0, max exponents of I]
    if len(J) > 1 and _grid.fits(I.max_exponents):
        return _colon_ideal_grid(I, J)
    return intersect_all([colon_monomial(I, g) for g in J.gens])


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.ring, [squarefree_part(g) for g in I.gens])


def support(I: MonomialIdeal) -> frozenset:
    """0-based indices of the variables dividing some generator."""
    return frozenset(i for g in I.gens for i, e in enumerate(g) if e)


def degree(I: MonomialIdeal) -> int:
    """Largest total degree of a minimal generator (0 for the zero ideal)."""
    return max((sum(g) for g in I.gens), default=0)
