"""Dense boolean grids over exponent boxes.

A monomial ideal restricted to the box ``0 <= a <= bounds`` is an up-set of
the grid; storing it as a boolean array turns membership, intersection and
colon into elementwise numpy operations. Every helper here works on arrays
of shape ``tuple(b + 1 for b in bounds)``.
"""

import numpy as np

# Above this many cells the callers fall back to generator-level algorithms.
GRID_LIMIT = 4_000_000


def grid_size(bounds):
    size = 1
    for b in bounds:
        size *= int(b) + 1
    return size


def fits(bounds, limit=GRID_LIMIT):
    return grid_size(bounds) <= limit


def upset(gens, bounds):
    """Indicator of the ideal generated by ``gens`` on the box ``[0, bounds]``.

    Generators with an exponent beyond the box are clamped; that is exact
    only when the caller's bounds dominate the generators it cares about.
    """
    shape = tuple(int(b) + 1 for b in bounds)
    ind = np.zeros(shape, dtype=bool)
    if len(gens) == 0:
        return ind
    g = np.minimum(np.asarray(gens, dtype=np.int64), np.asarray(bounds, dtype=np.int64))
    ind[tuple(g.T)] = True
    for axis in range(len(shape)):
        np.logical_or.accumulate(ind, axis=axis, out=ind)
    return ind


def shift_down(ind, offset):
    """Return ``out[a] = ind[min(a + offset, top)]`` (edge-saturated shift)."""
    out = ind
    for axis, off in enumerate(offset):
        off = int(off)
        if off == 0:
            continue
        length = out.shape[axis]
        if off >= length:
            last = np.take(out, [length - 1], axis=axis)
            out = np.repeat(last, length, axis=axis)
            continue
        head = np.take(out, np.arange(off, length), axis=axis)
        tail = np.repeat(np.take(out, [length - 1], axis=axis), off, axis=axis)
        out = np.concatenate([head, tail], axis=axis)
    return out


def minimal_points(ind):
    """Exponent vectors of the minimal elements of an up-set indicator."""
    keep = ind.copy()
    for axis in range(ind.ndim):
        if ind.shape[axis] < 2:
            continue
        below = np.zeros_like(ind)
        src = [slice(None)] * ind.ndim
        dst = [slice(None)] * ind.ndim
        src[axis] = slice(0, -1)
        dst[axis] = slice(1, None)
        below[tuple(dst)] = ind[tuple(src)]
        keep &= ~below
    return np.argwhere(keep)
