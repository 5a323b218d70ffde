"""Exact rational linear feasibility by phase-one simplex.

Only feasibility is needed: does ``A x = b, x >= 0`` have a solution? The
tableau is kept in :class:`fractions.Fraction` and pivots follow Bland's
rule, so the method terminates and never rounds.
"""

from fractions import Fraction


def feasible_point(A, b):
    """Return a rational ``x >= 0`` with ``A x = b``, or ``None`` if none exists.

    Parameters
    ----------
    A : sequence of sequence of int or Fraction
        ``m`` rows of equal length ``N``.
    b : sequence of int or Fraction
        Right-hand side of length ``m``.

    Examples
    --------
    >>> feasible_point([[1, 1]], [1]) is not None
    True
    >>> feasible_point([[1, 1]], [-1]) is None
    True
    """
    m = len(A)
    if m != len(b):
        raise ValueError("row count of A does not match b")
    N = len(A[0]) if m else 0
    if any(len(row) != N for row in A):
        raise ValueError("ragged constraint matrix")
    # rows with negative rhs are negated so the artificial basis is feasible
    rows = []
    for row, rhs in zip(A, b):
        sign = -1 if rhs < 0 else 1
        rows.append([Fraction(sign * v) for v in row] + [Fraction(sign * rhs)])
    # columns 0..N-1 real, N..N+m-1 artificial; last entry is the rhs
    T = []
    for i, row in enumerate(rows):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        T.append(row[:N] + art + [row[N]])
    basis = [N + i for i in range(m)]
    width = N + m
    # reduced costs for minimizing the sum of artificials
    cost = [Fraction(0)] * (width + 1)
    for row in T:
        for j in range(N):
            cost[j] -= row[j]
        cost[width] -= row[width]

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i, row in enumerate(T):
            if row[enter] > 0:
                ratio = row[width] / row[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            # cannot happen in phase one (objective is bounded below by 0)
            raise ArithmeticError("phase-one problem reported unbounded")
        _pivot(T, cost, leave, enter)
        basis[leave] = enter

    if cost[width] != 0:
        return None
    x = [Fraction(0)] * N
    for i, j in enumerate(basis):
        if j < N:
            x[j] = T[i][width]
    return x


def _pivot(T, cost, r, c):
    prow = T[r]
    piv = prow[c]
    if piv != 1:
        T[r] = prow = [v / piv for v in prow]
    nz = [j for j, v in enumerate(prow) if v != 0]
    for i, row in enumerate(T):
        if i == r:
            continue
        f = row[c]
        if f != 0:
            for j in nz:
                row[j] -= f * prow[j]
    f = cost[c]
    if f != 0:
        for j in nz:
            cost[j] -= f * prow[j]


def is_feasible(A, b) -> bool:
    return feasible_point(A, b) is not None
