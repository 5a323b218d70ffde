"""Simple graphs, edge ideals and vertex cover ideals.

Vertices are ``1..n`` and correspond to the variables ``x1..xn``.

Graph text format: the first non-blank line is the vertex count, every
further line is an edge ``i j`` (1-indexed). ``#`` starts a comment.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .closure import is_integrally_closed
from .core import MonomialIdeal, Ring, colon_ideal, intersect_all, power
from .primes import alexander_dual

MAX_CYCLE_VERTICES = 16


class GraphFormatError(ValueError):
    pass


@dataclass(frozen=True)
class SimpleGraph:
    vertex_count: int
    edges: frozenset

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a graph needs at least one vertex")
        norm = set()
        for e in self.edges:
            i, j = (int(v) for v in e)
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= self.vertex_count and 1 <= j <= self.vertex_count):
                raise ValueError(f"edge {i} {j} out of range 1..{self.vertex_count}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n, edges):
        edges = list(edges)
        seen = set()
        for e in edges:
            key = tuple(sorted(e))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(edges))

    def sorted_edges(self):
        return sorted(self.edges)

    def neighbours(self, v):
        return {j if i == v else i for i, j in self.edges if v in (i, j)}

    def ring(self) -> Ring:
        return Ring.standard(self.vertex_count)

    def to_text(self) -> str:
        lines = [str(self.vertex_count)] + [f"{i} {j}" for i, j in self.sorted_edges()]
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> SimpleGraph:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphFormatError("empty graph file")
    try:
        n = int(lines[0])
    except ValueError:
        raise GraphFormatError(f"first line must be the vertex count, got {lines[0]!r}") from None
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"edge line must be 'i j', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {line!r}") from None
    try:
        return SimpleGraph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


# -- a few named graphs ----------------------------------------------------

def path_graph(n):
    return SimpleGraph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle_graph(n):
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph(n, frozenset((i, i % n + 1) for i in range(1, n + 1)))


def complete_graph(n):
    return SimpleGraph(n, frozenset(itertools.combinations(range(1, n + 1), 2)))


def petersen_graph():
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6 + i, 6 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph(10, frozenset(outer + spokes + inner))


def random_graph(n, p, rng: random.Random, min_edges=1):
    """Erdos-Renyi graph, resampled until it has at least ``min_edges`` edges."""
    while True:
        edges = [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < p]
        if len(edges) >= min_edges:
            return SimpleGraph(n, frozenset(edges))


# -- ideals ------------------------------------------------------------------

def _require_edges(G):
    if not G.edges:
        raise ValueError("the graph has no edges")


def edge_ideal(G: SimpleGraph) -> MonomialIdeal:
    """``I(G) = (x_i x_j : {i, j} an edge)``."""
    _require_edges(G)
    R = G.ring()
    gens = []
    for i, j in G.edges:
        e = [0] * G.vertex_count
        e[i - 1] = e[j - 1] = 1
        gens.append(tuple(e))
    return MonomialIdeal(R, gens)


def cover_ideal(G: SimpleGraph) -> MonomialIdeal:
    """Alexander dual of the edge ideal; generators are the minimal vertex covers."""
    return alexander_dual(edge_ideal(G))


def induced_odd_cycles(G: SimpleGraph) -> list:
    """Vertex sets of odd size >= 3 inducing a cycle, sorted by size then lexicographically."""
    n = G.vertex_count
    if n > MAX_CYCLE_VERTICES:
        raise ValueError(f"induced cycle enumeration is limited to {MAX_CYCLE_VERTICES} vertices")
    adj = {v: G.neighbours(v) for v in range(1, n + 1)}
    found = []
    for size in range(3, n + 1, 2):
        for S in itertools.combinations(range(1, n + 1), size):
            Sset = set(S)
            if any(len(adj[v] & Sset) != 2 for v in S):
                continue
            # all degrees are 2, so it is a union of cycles; require one cycle
            seen = {S[0]}
            stack = [S[0]]
            while stack:
                v = stack.pop()
                for w in adj[v] & Sset:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == size:
                found.append(S)
    return found


def fhv_components(G: SimpleGraph) -> list:
    """The ideals ``(x_i, x_j)^2`` per edge and ``(x_i1^2, ..., x_is^2)`` per induced odd cycle."""
    _require_edges(G)
    R = G.ring()
    n = G.vertex_count
    comps = []
    for i, j in G.sorted_edges():
        comps.append(power(MonomialIdeal(R, [R.var(i - 1), R.var(j - 1)]), 2))
    for C in induced_odd_cycles(G):
        gens = []
        for v in C:
            e = [0] * n
            e[v - 1] = 2
            gens.append(tuple(e))
        comps.append(MonomialIdeal(R, gens))
    return comps


def fhv_square_decomposition(G: SimpleGraph) -> MonomialIdeal:
    """Intersection of :func:`fhv_components`; always equal to ``cover_ideal(G)**2``."""
    return intersect_all(fhv_components(G))


@dataclass(frozen=True)
class P1Result:
    closed: bool
    colon_ok: bool

    def ok(self):
        return self.closed and self.colon_ok


def verify_p1(G: SimpleGraph) -> P1Result:
    """Check that ``J**2`` is integrally closed and ``(J**3 : J) == J**2`` for the cover ideal ``J``."""
    J = cover_ideal(G)
    J2 = power(J, 2)
    return P1Result(
        closed=is_integrally_closed(J2),
        colon_ok=colon_ideal(J2 * J, J) == J2,
    )
