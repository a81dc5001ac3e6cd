"""Independent-set hardness construction on ``G[n, n]`` and exact set oracles.

The product of a connected non-complete graph on ``n`` vertices holds two copies
of it; ``(x, 1)`` and ``(y, 2)`` are joined exactly when ``x != y`` and ``xy``
is not an edge, so every vertex ends with degree ``n - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from .graph_core import Graph, GraphError, build_graph, complement
from .structure import is_connected

MIS_ORDER_BOUND = 24


@dataclass(frozen=True)
class ReductionInstance:
    source: Graph
    product: Graph

    @property
    def n(self) -> int:
        return self.source.order

    def vertex(self, x: int, copy: int) -> int:
        """Product vertex for source vertex ``x`` in copy 1 or 2."""
        if copy not in (1, 2):
            raise ValueError(f"copy must be 1 or 2, got {copy}")
        return x + (copy - 1) * self.n

    def origin(self, p: int) -> tuple[int, int]:
        return p % self.n, p // self.n + 1


def build_reduction(g: Graph) -> ReductionInstance:
    n = g.order
    if n == 0 or not is_connected(g):
        raise GraphError("reduction needs a connected source graph")
    if g.size == n * (n - 1) // 2:
        raise GraphError("reduction of a complete graph gives the excluded union K_n + K_n")
    edges = []
    for x, y in g.edges():
        edges.append((x, y))
        edges.append((x + n, y + n))
    for x in range(n):
        for y in range(n):
            if x != y and not g.has_edge(x, y):
                edges.append((x, y + n))
    return ReductionInstance(g, build_graph(2 * n, edges))


def is_independent(g: Graph, vertices) -> bool:
    vs = list(vertices)
    return all(not g.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])


def _mask_to_set(mask: int) -> frozenset:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def max_independent_set_exact(g: Graph) -> frozenset:
    if g.order > MIS_ORDER_BOUND:
        raise GraphError(f"independent-set oracle bound is {MIS_ORDER_BOUND}, got {g.order}")
    return _mask_to_set(_kernels.max_independent_set(list(g.masks), g.order))


def max_clique_exact(g: Graph) -> frozenset:
    return max_independent_set_exact(complement(g))


def min_vertex_cover_exact(g: Graph) -> frozenset:
    return frozenset(range(g.order)) - max_independent_set_exact(g)


def extract_solution(inst: ReductionInstance, independent) -> frozenset:
    """Project the larger copy-side of a product independent set to the source.

    Ties go to copy 1.
    """
    independent = set(independent)
    if not is_independent(inst.product, independent):
        raise GraphError("vertex set is not independent in the product graph")
    side1 = {inst.origin(p)[0] for p in independent if inst.origin(p)[1] == 1}
    side2 = {inst.origin(p)[0] for p in independent if inst.origin(p)[1] == 2}
    return frozenset(side1 if len(side1) >= len(side2) else side2)


@dataclass(frozen=True)
class ApproxReport:
    source_optimum: int  # |J|
    product_optimum: int  # |I|
    extracted: int  # |S|

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.source_optimum, self.extracted) if self.extracted else Fraction(0)

    @property
    def holds(self) -> bool:
        return self.source_optimum <= 2 * self.extracted


def verify_two_approx(g: Graph) -> ApproxReport:
    inst = build_reduction(g)
    j = max_independent_set_exact(g)
    i = max_independent_set_exact(inst.product)
    s = extract_solution(inst, i)
    if not is_independent(g, s):
        raise AssertionError("extracted set is not independent in the source graph")
    report = ApproxReport(len(j), len(i), len(s))
    if not report.holds:
        raise AssertionError(f"2-approximation failed: |J|={len(j)} > 2|S|={2 * len(s)}")
    return report
