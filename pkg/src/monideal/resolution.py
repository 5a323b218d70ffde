"""Multigraded Betti numbers and depth of ``R/I``.

For a multidegree ``a`` the upper Koszul simplicial complex is

    K^a(I) = { F squarefree, F <= a : x^(a - F) in I }

and ``beta_{i,a}(R/I) = dim H~_{i-2}(K^a(I); Q)`` for ``i >= 1``. Nonzero
values only occur at ``a`` in the lcm lattice of the minimal generators.
Depth follows from Auslander-Buchsbaum: ``depth R/I = n - pd R/I``.

Homology is taken over the rationals; torsion and positive characteristic
are out of scope.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import _grid
from .core import MonomialIdeal, divides

DEFAULT_CAP = 200_000


class LatticeCapExceeded(RuntimeError):
    """The lcm lattice grew past the configured cap."""


@dataclass(frozen=True)
class LcmLattice:
    ideal: MonomialIdeal
    elements: tuple

    def __len__(self):
        return len(self.elements)

    def __contains__(self, a):
        return tuple(a) in self._set

    @property
    def _set(self):
        return frozenset(self.elements)


def lcm_lattice(I: MonomialIdeal, cap: int = DEFAULT_CAP) -> LcmLattice:
    """All lcms of non-empty subsets of the minimal generators."""
    if I.is_zero() or I.is_unit():
        raise ValueError("lcm lattice needs a proper nonzero ideal")
    L = np.empty((0, I.n), dtype=np.int64)
    for g in I.array:
        joined = np.maximum(L, g)
        L = np.unique(np.concatenate([L, joined, g[None, :]]), axis=0)
        if len(L) > cap:
            raise LatticeCapExceeded(f"lcm lattice exceeds {cap} elements")
    elems = sorted((tuple(int(e) for e in row) for row in L), key=lambda a: (sum(a), a))
    return LcmLattice(I, tuple(elems))


def _koszul_faces(a, member):
    verts = [i for i, e in enumerate(a) if e > 0]
    faces = []
    for r in range(len(verts) + 1):
        for F in itertools.combinations(verts, r):
            b = list(a)
            for i in F:
                b[i] -= 1
            if member(tuple(b)):
                faces.append(F)
    return frozenset(faces)


def koszul_complex(I: MonomialIdeal, a) -> frozenset:
    """Faces (sorted index tuples) of the upper Koszul complex of ``I`` at ``a``.

    The void complex is ``frozenset()``; the complex whose only face is the
    empty set is ``frozenset({()})``.
    """
    a = tuple(int(e) for e in a)
    if len(a) != I.n or any(e < 0 for e in a):
        raise ValueError(f"bad multidegree {a}")
    return _koszul_faces(a, lambda b: any(divides(g, b) for g in I.gens))


def rank(rows) -> int:
    """Rank over Q of an integer matrix via fraction-free (Bareiss) elimination."""
    M = [list(r) for r in rows if any(r)]
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        for i in range(r + 1, len(M)):
            f = M[i][c]
            row_i, row_r = M[i], M[r]
            for j in range(c, ncols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
        prev = p
        r += 1
        if r == len(M):
            break
    return r


def _boundary(faces_hi, faces_lo):
    index = {f: j for j, f in enumerate(faces_lo)}
    mat = []
    for f in faces_hi:
        row = [0] * len(faces_lo)
        for k in range(len(f)):
            row[index[f[:k] + f[k + 1:]]] = -1 if k % 2 else 1
        mat.append(row)
    return mat


@lru_cache(maxsize=65536)
def reduced_homology(faces: frozenset) -> dict:
    """``{d: dim H~_d}`` over Q for the nonzero reduced homology groups."""
    if not faces:
        return {}
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for fs in by_dim.values():
        fs.sort()
    top = max(by_dim)
    ranks = {}
    for d in range(0, top + 1):
        hi, lo = by_dim.get(d, []), by_dim.get(d - 1, [])
        ranks[d] = rank(_boundary(hi, lo)) if hi and lo else 0
    out = {}
    for d in range(-1, top + 1):
        dim = len(by_dim.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if dim:
            out[d] = dim
    return out


@dataclass
class BettiTable:
    """Multigraded Betti numbers of ``R/I``: ``{(i, a): beta_{i,a}}``."""

    n: int
    entries: dict = field(default_factory=dict)

    def totals(self) -> dict:
        c = Counter()
        for (i, _), v in self.entries.items():
            c[i] += v
        return dict(sorted(c.items()))

    def projective_dimension(self) -> int:
        return max(i for (i, _), v in self.entries.items() if v)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * v for (i, _), v in self.entries.items())


def betti_numbers(I: MonomialIdeal, cap: int = DEFAULT_CAP) -> BettiTable:
    """Multigraded Betti table of ``R/I`` from upper Koszul homology on the lcm lattice."""
    lattice = lcm_lattice(I, cap=cap)
    if _grid.fits(I.max_exponents):
        # lattice points never exceed the generator bounds, so no clamping
        grid = I._grid(I.max_exponents)
        member = grid.__getitem__
    else:
        def member(b):
            return any(divides(g, b) for g in I.gens)
    table = BettiTable(I.n, {(0, (0,) * I.n): 1})
    for a in lattice.elements:
        for d, dim in reduced_homology(_koszul_faces(a, member)).items():
            table.entries[(d + 2, a)] = dim
    return table


def projective_dimension(I: MonomialIdeal, cap: int = DEFAULT_CAP) -> int:
    """``pd R/I``."""
    if I.is_zero() or I.is_unit():
        raise ValueError("need a proper nonzero ideal")
    return betti_numbers(I, cap=cap).projective_dimension()


def depth_quotient(I: MonomialIdeal, cap: int = DEFAULT_CAP) -> int:
    """``depth R/I = n - pd R/I`` (Auslander-Buchsbaum)."""
    return I.n - projective_dimension(I, cap=cap)


@dataclass(frozen=True)
class Depth:
    """A depth value; with ``exact=False`` it only records zero vs at least one.

    In that case ``value`` is 0 (the maximal ideal is associated) or 1,
    read as a lower bound.
    """

    value: int
    exact: bool

    def __str__(self):
        return str(self.value) if self.exact or self.value == 0 else f">={self.value}"

    def relation(self):
        """``'= 3'`` for known values, ``'>= 1'`` for lower bounds."""
        return f"= {self.value}" if self.exact or self.value == 0 else f">= {self.value}"


def _drops(a: Depth, b: Depth) -> bool:
    # certain violation a < b: a is an exact value and b's lower bound exceeds it
    return (a.exact or a.value == 0) and b.value > a.value


@dataclass
class DepthProfile:
    values: list
    violations: list
    truncated: bool = False


def depth_function(I: MonomialIdeal, kmax: int, exact: bool = True, cap: int = DEFAULT_CAP) -> DepthProfile:
    """``depth R/I^k`` for ``k = 1..kmax`` with every ``k`` where depth increases.

    With ``exact=False`` each value is the Ass-based zero / nonzero verdict,
    which is enough to detect an increase from 0. When a power exceeds the
    lattice cap the profile is returned truncated.
    """
    from .primes import maximal_ideal_associated

    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    values = []
    truncated = False
    P = I
    for k in range(1, kmax + 1):
        if k > 1:
            P = P * I
        if exact:
            try:
                values.append(Depth(depth_quotient(P, cap=cap), True))
            except LatticeCapExceeded:
                truncated = True
                break
        else:
            m_ass = maximal_ideal_associated(P)[0]
            values.append(Depth(0 if m_ass else 1, False))
    violations = [k for k in range(1, len(values)) if _drops(values[k - 1], values[k])]
    return DepthProfile(values, violations, truncated)
