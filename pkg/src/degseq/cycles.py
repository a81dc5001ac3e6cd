"""Exact Hamiltonicity and pancyclicity, plus classical sufficient conditions.

The predicates are only ever used as one-directional cross-checks on the exact
solvers; none of them is assumed to decide anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import _kernels
from .graph_core import Graph, GraphError, is_isomorphic
from .structure import bipartition, block_decomposition, distance_matrix, is_connected

HAMILTONIAN_ORDER_BOUND = 20
PANCYCLIC_ORDER_BOUND = 14


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple
    closed: bool

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class Pancyclicity:
    pancyclic: bool
    missing_length: Optional[int] = None

    def __bool__(self):
        return self.pancyclic


def _bound(g: Graph, limit: int, what: str):
    if g.order > limit:
        raise GraphError(f"{what} solver bound is {limit} vertices, got {g.order}")


def validate_witness(g: Graph, w: CycleWitness, spanning: bool = True) -> bool:
    vs = w.vertices
    if len(set(vs)) != len(vs) or (spanning and len(vs) != g.order):
        return False
    if any(not g.has_edge(a, b) for a, b in zip(vs, vs[1:])):
        return False
    if w.closed:
        return len(vs) >= 3 and g.has_edge(vs[-1], vs[0])
    return True


def hamiltonian_cycle(g: Graph) -> Optional[CycleWitness]:
    _bound(g, HAMILTONIAN_ORDER_BOUND, "Hamiltonian")
    found = _kernels.hamiltonian_cycle(list(g.masks), g.order)
    return None if found is None else CycleWitness(tuple(found), True)


def hamiltonian_path(g: Graph) -> Optional[CycleWitness]:
    _bound(g, HAMILTONIAN_ORDER_BOUND, "Hamiltonian")
    found = _kernels.hamiltonian_path(list(g.masks), g.order)
    return None if found is None else CycleWitness(tuple(found), False)


def cycle_of_length(g: Graph, length: int) -> Optional[CycleWitness]:
    _bound(g, HAMILTONIAN_ORDER_BOUND, "cycle")
    found = _kernels.cycle_of_length(list(g.masks), g.order, length)
    return None if found is None else CycleWitness(tuple(found), True)


def is_pancyclic(g: Graph) -> Pancyclicity:
    """Cycles of every length 3..order; reports the first missing length."""
    _bound(g, PANCYCLIC_ORDER_BOUND, "pancyclicity")
    masks = list(g.masks)
    for length in range(3, g.order + 1):
        if _kernels.cycle_of_length(masks, g.order, length) is None:
            return Pancyclicity(False, length)
    return Pancyclicity(True)


def _petersen() -> Graph:
    from .transform import fixture

    return fixture("petersen")


@dataclass(frozen=True)
class PredicateReport:
    dirac: bool
    ore: bool
    holton_sheehan: bool
    rahman_kaykobad: bool
    bondy_premise: Optional[bool]  # None when the Hamiltonian test is out of range
    moon_moser: Optional[bool]  # None unless the graph is bipartite with balanced parts
    caro_wei_bound: Fraction


def _nonadjacent_pairs(g: Graph):
    for u in range(g.order):
        for v in range(u + 1, g.order):
            if not g.has_edge(u, v):
                yield u, v


def dirac(g: Graph) -> bool:
    n = g.order
    return n >= 3 and 2 * min(g.degrees) >= n


def ore(g: Graph) -> bool:
    n = g.order
    d = g.degrees
    return n >= 3 and all(d[u] + d[v] >= n for u, v in _nonadjacent_pairs(g))


def holton_sheehan(g: Graph) -> bool:
    n = g.order
    if n < 3 or len(set(g.degrees)) != 1:
        return False
    r = g.degrees[0]
    if n > 3 * r + 1 or not is_connected(g) or block_decomposition(g).cut_vertices:
        return False
    return not (n == 10 and r == 3 and is_isomorphic(g, _petersen()))


def rahman_kaykobad(g: Graph) -> bool:
    # the underlying theorem is stated for connected graphs
    n = g.order
    if n == 0 or not is_connected(g):
        return False
    d = g.degrees
    dist = distance_matrix(g)
    return all(d[u] + d[v] + dist[u][v] > n for u, v in _nonadjacent_pairs(g))


def moon_moser(g: Graph, parts) -> bool:
    """Balanced bipartite degree condition (parts of size k >= 2).

    For every j with 1 <= j <= k/2 fewer than j vertices of each part have
    degree at most j.
    """
    u, v = parts
    k = len(u)
    if k != len(v) or k < 2:
        return False
    for j in range(1, k // 2 + 1):
        for side in (u, v):
            if sum(1 for p in side if g.degrees[p] <= j) >= j:
                return False
    return True


def caro_wei_bound(g: Graph) -> Fraction:
    return sum((Fraction(1, d + 1) for d in g.degrees), Fraction(0))


def literature_predicates(g: Graph) -> PredicateReport:
    bondy = None
    if g.order <= HAMILTONIAN_ORDER_BOUND:
        bondy = 4 * g.size >= g.order ** 2 and hamiltonian_cycle(g) is not None
    mm = None
    bp = bipartition(g)
    if bp.is_bipartite and len(bp.parts[0]) == len(bp.parts[1]):
        mm = moon_moser(g, bp.parts)
    return PredicateReport(
        dirac=dirac(g),
        ore=ore(g),
        holton_sheehan=holton_sheehan(g),
        rahman_kaykobad=rahman_kaykobad(g),
        bondy_premise=bondy,
        moon_moser=mm,
        caro_wei_bound=caro_wei_bound(g),
    )
