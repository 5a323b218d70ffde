"""Irreducible decompositions, associated primes and Alexander duality.

Associated primes are computed two independent ways:

* ``associated_primes_decomp`` reads them off an irredundant irreducible
  decomposition;
* ``associated_primes_witness`` localizes at every variable subset ``S`` and
  searches a bounded box for a monomial ``w`` with ``(I_S : w)`` equal to the
  maximal ideal of the subring on ``S``.

Witness box: if ``(I : w) = m`` with ``w`` not in ``I`` then ``w_i <= M_i - 1``
for every ``i``, where ``M_i`` is the largest exponent of ``x_i`` among the
minimal generators. Otherwise ``w_i >= M_i`` and ``x_i w`` in ``I`` imply that
the generator dividing ``x_i w`` already divides ``w``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _grid
from .core import MonomialIdeal, Ring, divides

WITNESS = "witness-search"
DECOMPOSITION = "decomposition"


@dataclass(frozen=True, order=True)
class MonomialPrime:
    """The prime ideal generated by the variables with 0-based indices ``vars``."""

    vars: tuple
    ring: Ring

    def __post_init__(self):
        vs = tuple(sorted(set(int(i) for i in self.vars)))
        if not vs:
            raise ValueError("a monomial prime needs at least one variable")
        if vs[0] < 0 or vs[-1] >= self.ring.n:
            raise ValueError(f"variable index out of range in {vs}")
        object.__setattr__(self, "vars", vs)

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ring, [self.ring.var(i) for i in self.vars])

    def is_maximal(self) -> bool:
        return len(self.vars) == self.ring.n

    def __str__(self):
        return "(" + ", ".join(self.ring.names[i] for i in self.vars) + ")"


def _prime_key(p):
    return (len(p.vars), p.vars)


@dataclass(frozen=True)
class IrreducibleComponent:
    """``<x_i^{a_i} : a_i > 0>``; a zero entry means the variable is absent."""

    powers: tuple
    ring: Ring

    def __post_init__(self):
        pw = tuple(int(a) for a in self.powers)
        if len(pw) != self.ring.n or any(a < 0 for a in pw) or not any(pw):
            raise ValueError(f"bad irreducible component exponents {pw}")
        object.__setattr__(self, "powers", pw)

    def ideal(self) -> MonomialIdeal:
        gens = []
        for i, a in enumerate(self.powers):
            if a:
                e = [0] * self.ring.n
                e[i] = a
                gens.append(tuple(e))
        return MonomialIdeal(self.ring, gens)

    def radical(self) -> MonomialPrime:
        return MonomialPrime(tuple(i for i, a in enumerate(self.powers) if a), self.ring)

    def __str__(self):
        body = ", ".join(
            self.ring.format_monomial(tuple(a if j == i else 0 for j in range(self.ring.n)))
            for i, a in enumerate(self.powers) if a
        )
        return f"({body})"


@dataclass(frozen=True)
class AssReport:
    ideal: MonomialIdeal
    primes: tuple
    method: str

    def __contains__(self, prime):
        return prime in self.primes

    def as_sets(self):
        return frozenset(self.primes)


def _require_proper_nonzero(I):
    if I.is_zero():
        raise ValueError("the zero ideal has no decomposition / associated primes here")
    if I.is_unit():
        raise ValueError("the unit ideal has no associated primes")


# ---------------------------------------------------------------------------
# irreducible decomposition


def _maximal_rows(arr):
    """Rows of ``arr`` not dominated (componentwise <=) by a different row."""
    arr = np.unique(arr, axis=0)
    N = len(arr)
    if N <= 1:
        return arr
    keep = np.empty(N, dtype=bool)
    chunk = max(1, 20_000_000 // max(1, N * arr.shape[1]))
    for start in range(0, N, chunk):
        block = arr[start:start + chunk]
        above = (block[:, None, :] <= arr[None, :, :]).all(axis=2)
        keep[start:start + chunk] = above.sum(axis=1) == 1
    return arr[keep]


def irreducible_decomposition(I: MonomialIdeal) -> list:
    """Irredundant irreducible components of ``I``, in canonical order.

    Generators are added one at a time. For an irreducible ``Q`` and a
    monomial ``x^g`` outside it, ``Q + (x^g)`` splits as the intersection of
    ``Q + (x_i^{g_i})`` over the support of ``g``. After each step components
    containing another component are dropped; for irreducible monomial ideals
    that pairwise filter is exactly irredundancy.

    Examples
    --------
    >>> R = Ring(("x", "y"))
    >>> [str(c) for c in irreducible_decomposition(MonomialIdeal(R, [(2, 0), (1, 1)]))]
    ['(x)', '(x^2, y)']
    """
    _require_proper_nonzero(I)
    n = I.n
    big = max(I.max_exponents) + 1
    # absent variables are encoded as `big`; then Q contains P iff Q <= P
    comps = None
    for g in I.gens:
        g = np.asarray(g, dtype=np.int64)
        supp = np.flatnonzero(g)
        if comps is None:
            rows = np.full((len(supp), n), big, dtype=np.int64)
            rows[np.arange(len(supp)), supp] = g[supp]
            comps = rows
            continue
        inside = (comps <= np.where(g > 0, g, -1)).any(axis=1)
        keep, split = comps[inside], comps[~inside]
        parts = [keep]
        for i in supp:
            part = split.copy()
            part[:, i] = g[i]
            parts.append(part)
        comps = _maximal_rows(np.concatenate(parts))
    out = []
    for row in comps:
        powers = tuple(int(a) if a < big else 0 for a in row)
        out.append(IrreducibleComponent(powers, I.ring))
    out.sort(key=lambda c: (sum(1 for a in c.powers if a), tuple(-a for a in c.powers)))
    return out


def associated_primes_decomp(I: MonomialIdeal) -> AssReport:
    primes = {c.radical() for c in irreducible_decomposition(I)}
    return AssReport(I, tuple(sorted(primes, key=_prime_key)), DECOMPOSITION)


# ---------------------------------------------------------------------------
# witness search


def localize(I: MonomialIdeal, S) -> MonomialIdeal:
    """Set every variable outside ``S`` to 1; the result lives in the subring on ``S``."""
    S = sorted(set(S))
    if not S:
        raise ValueError("localization needs a non-empty variable set")
    ring = I.ring.subring(S)
    return MonomialIdeal(ring, [tuple(g[i] for i in S) for g in I.gens])


def _witnesses_grid(I, limit=None):
    M = I.max_exponents
    ind = I._grid(M)
    core = tuple(slice(0, m) for m in M)
    cand = ~ind[core]
    for i in range(I.n):
        sl = list(core)
        sl[i] = slice(1, M[i] + 1)
        cand &= ind[tuple(sl)]
    return np.argwhere(cand)


def _first_witness_scan(I, box):
    gens = I.gens
    for w in itertools.product(*(range(b) for b in box)):
        if any(divides(g, w) for g in gens):
            continue
        ok = True
        for i in range(I.n):
            up = list(w)
            up[i] += 1
            if not any(divides(g, up) for g in gens):
                ok = False
                break
        if ok:
            return tuple(w)
    return None


def maximal_ideal_associated(I: MonomialIdeal, box=None):
    """Whether the maximal ideal of ``I.ring`` is associated to ``I``.

    Parameters
    ----------
    I : MonomialIdeal
        Proper, nonzero ideal.
    box : sequence of int, optional
        Search ``0 <= w_i < box[i]`` instead of the default ``M_i``; used to
        test that the default box is complete.

    Returns
    -------
    (bool, tuple or None)
        The verdict and, when true, the grlex-smallest witness ``w`` with
        ``(I : w)`` maximal.
    """
    _require_proper_nonzero(I)
    M = I.max_exponents
    if box is None and min(M) == 0:
        return False, None
    if box is None and _grid.fits(M):
        pts = _witnesses_grid(I)
        if len(pts) == 0:
            return False, None
        best = min((tuple(int(e) for e in p) for p in pts), key=lambda w: (sum(w), tuple(-e for e in w)))
        return True, best
    w = _first_witness_scan(I, box if box is not None else M)
    return (w is not None), w


def associated_primes_witness(I: MonomialIdeal, threads: int = 1) -> AssReport:
    """Associated primes by localizing at each subset of the support."""
    _require_proper_nonzero(I)
    supp = sorted({i for g in I.gens for i, e in enumerate(g) if e})
    subsets = [S for r in range(1, len(supp) + 1) for S in itertools.combinations(supp, r)]

    def check(S):
        loc = localize(I, S)
        if loc.is_unit():
            return False
        return maximal_ideal_associated(loc)[0]

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            verdicts = list(pool.map(check, subsets))
    else:
        verdicts = [check(S) for S in subsets]
    primes = [MonomialPrime(S, I.ring) for S, ok in zip(subsets, verdicts) if ok]
    return AssReport(I, tuple(sorted(primes, key=_prime_key)), WITNESS)


def associated_primes(I: MonomialIdeal, method: str = WITNESS, threads: int = 1) -> AssReport:
    if method in (WITNESS, "witness"):
        return associated_primes_witness(I, threads=threads)
    if method in (DECOMPOSITION, "decomp"):
        return associated_primes_decomp(I)
    raise ValueError(f"unknown method {method!r}")


def minimal_primes(I: MonomialIdeal) -> tuple:
    ass = associated_primes_decomp(I).primes
    return tuple(p for p in ass if not any(q != p and set(q.vars) <= set(p.vars) for q in ass))


# ---------------------------------------------------------------------------
# Alexander duality


def minimal_transversals(edges) -> list:
    """Minimal hitting sets of a family of vertex sets (Berge's incremental method)."""
    trans = {frozenset()}
    for e in edges:
        e = frozenset(e)
        grown = set()
        for t in trans:
            if t & e:
                grown.add(t)
            else:
                grown.update(t | {v} for v in e)
        # drop non-minimal sets; smaller sets first
        ordered = sorted(grown, key=len)
        trans = set()
        for t in ordered:
            if not any(s <= t for s in trans):
                trans.add(t)
    return sorted((tuple(sorted(t)) for t in trans), key=lambda t: (len(t), t))


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    """Square-free ideal generated by the minimal transversals of the generator supports."""
    _require_proper_nonzero(I)
    if not I.is_squarefree():
        raise ValueError("Alexander duality is only defined here for square-free ideals")
    edges = [[i for i, e in enumerate(g) if e] for g in I.gens]
    gens = []
    for t in minimal_transversals(edges):
        e = [0] * I.n
        for i in t:
            e[i] = 1
        gens.append(tuple(e))
    return MonomialIdeal(I.ring, gens)
