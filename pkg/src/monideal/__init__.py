"""Exact computations with monomial ideals and the persistence of their powers."""

from .core import (
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

__version__ = "0.1.0"
