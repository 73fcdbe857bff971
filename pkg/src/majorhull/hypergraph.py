"""d-uniform weighted hypergraphs and weighted degree sequences.

Edge weights of a hypergraph are the stored values of a hypermatrix, and
each weighted degree is the matching slice sum divided by ``(d-1)!``.
Realizing a degree sequence therefore goes through :func:`hypermatrix.realize`.
"""

from dataclasses import dataclass
from math import factorial
from typing import Sequence

from . import hypermatrix
from .errors import InfeasibleError
from .hypermatrix import SymHypermatrix
from .scalar import EXACT, ScalarMode


@dataclass(frozen=True)
class WeightedHypergraph:
    """Vertices ``1..n``; ``edges`` is a tuple of ``(vertices, weight)``."""

    n: int
    d: int
    edges: tuple = ()

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"edge size d must be >= 2, got {self.d}")
        seen = set()
        edges = []
        for vertices, weight in self.edges:
            vertices = tuple(sorted(int(v) for v in vertices))
            if len(set(vertices)) != self.d or len(vertices) != self.d:
                raise ValueError(f"edge {vertices} does not have {self.d} distinct vertices")
            if vertices[0] < 1 or vertices[-1] > self.n:
                raise ValueError(f"edge {vertices} out of range 1..{self.n}")
            if weight < 0:
                raise ValueError(f"negative weight {weight} on {vertices}")
            if vertices in seen:
                raise ValueError(f"duplicate edge {vertices}")
            seen.add(vertices)
            edges.append((vertices, weight))
        object.__setattr__(self, "edges", tuple(sorted(edges)))

    def positive_edges(self):
        return [(e, w) for e, w in self.edges if w > 0]


def degrees(H: WeightedHypergraph) -> list:
    out = [0] * H.n
    for vertices, weight in H.edges:
        for v in vertices:
            out[v - 1] += weight
    return out


def to_hypermatrix(H: WeightedHypergraph) -> SymHypermatrix:
    return SymHypermatrix(H.n, H.d, {e: w for e, w in H.edges})


def from_hypermatrix(A: SymHypermatrix) -> WeightedHypergraph:
    return WeightedHypergraph(A.n, A.d, tuple(A.support.items()))


def realize_degrees(d: int, D: Sequence, mode: ScalarMode = EXACT) -> WeightedHypergraph:
    """A hypergraph with weighted degrees ``D`` and at most ``n`` positive edges."""
    D = mode.vector(D)
    f = factorial(int(d) - 1)
    try:
        A = hypermatrix.realize(d, [f * v for v in D], mode)
    except InfeasibleError as err:
        raise InfeasibleError(
            f"d*max(D) = {err.lhs / f} exceeds sum(D) = {err.rhs / f}",
            err.lhs / f, err.rhs / f) from None
    return from_hypermatrix(A)
