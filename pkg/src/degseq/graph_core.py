"""Immutable simple-graph value type and the primitives every module shares."""

from __future__ import annotations

from collections import Counter, deque
from functools import cached_property
from typing import Iterable, NamedTuple

from . import _kernels

CANONICAL_ORDER_BOUND = 16


class GraphError(ValueError):
    """Invalid graph construction or an operation outside its supported bound."""


class Graph:
    """Simple undirected graph on vertices ``0..order-1``.

    Neighbour lists are stored sorted; packed bit rows (``masks``) are built on
    first use, which keeps very large sparse graphs linear in memory.
    Instances are immutable and hashable.
    """

    def __init__(self, order: int, nbrs: tuple[tuple[int, ...], ...]):
        d = self.__dict__
        d["order"] = order
        d["_nbrs"] = nbrs
        d["degrees"] = tuple(len(row) for row in nbrs)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @cached_property
    def masks(self) -> tuple[int, ...]:
        out = []
        for row in self._nbrs:
            m = 0
            for u in row:
                m |= 1 << u
            out.append(m)
        return tuple(out)

    @cached_property
    def _adj_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(row) for row in self._nbrs)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u, row in enumerate(self._nbrs) for v in row if u < v]

    @property
    def size(self) -> int:
        return sum(self.degrees) // 2

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self._nbrs == other._nbrs

    def __hash__(self):
        return hash((self.order, self._nbrs))

    def __repr__(self):
        return f"Graph(order={self.order}, edges={self.edges()})"


def build_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate pairs collapse to one edge."""
    if order < 0:
        raise GraphError(f"negative order {order}")
    adj = [set() for _ in range(order)]
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(order, tuple(tuple(sorted(s)) for s in adj))


def from_masks(masks: Iterable[int]) -> Graph:
    """Build a graph from symmetric adjacency bit rows."""
    masks = list(masks)
    n = len(masks)
    nbrs = []
    for v, m in enumerate(masks):
        if m >> v & 1:
            raise GraphError(f"self-loop at vertex {v}")
        row = []
        x = m
        while x:
            low = x & -x
            u = low.bit_length() - 1
            if u >= n:
                raise GraphError(f"row {v} has a bit outside 0..{n - 1}")
            if not masks[u] >> v & 1:
                raise GraphError(f"adjacency is not symmetric at ({v}, {u})")
            row.append(u)
            x ^= low
        nbrs.append(tuple(row))
    g = Graph(n, tuple(nbrs))
    g.__dict__["masks"] = tuple(masks)
    return g


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return from_masks((full & ~m) & ~(1 << v) for v, m in enumerate(g.masks))


class DegreeMultiset(NamedTuple):
    """Sorted ``(degree, multiplicity)`` pairs."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def order(self) -> int:
        return sum(c for _, c in self.pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)


def degree_sequence(g: Graph) -> DegreeMultiset:
    return DegreeMultiset(tuple(sorted(Counter(g.degrees).items())))


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    seen = [False] * g.order
    parts = []
    for root in range(g.order):
        if seen[root]:
            continue
        seen[root] = True
        part = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    part.append(u)
                    queue.append(u)
        parts.append(sorted(part))
    return parts


def is_clique_union(g: Graph) -> tuple[int, ...] | None:
    """Sorted component sizes if every component is complete, else None."""
    sizes = []
    for part in connected_components(g):
        k = len(part)
        if any(g.degrees[v] != k - 1 for v in part):
            return None
        sizes.append(k)
    return tuple(sorted(sizes))


def _check_bound(g: Graph):
    if g.order > CANONICAL_ORDER_BOUND:
        raise GraphError(
            f"order {g.order} exceeds the canonical-form bound {CANONICAL_ORDER_BOUND}"
        )


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order under which the adjacency encoding is canonical."""
    _check_bound(g)
    perm, _ = _kernels.canonical_labeling(list(g.masks), g.order)
    return perm


def canonical_form(g: Graph) -> bytes:
    """Byte code identifying the isomorphism class of ``g``.

    Layout: one byte of order, then each relabeled adjacency row big-endian in
    ``ceil(order / 8)`` bytes.
    """
    _check_bound(g)
    _, rows = _kernels.canonical_labeling(list(g.masks), g.order)
    width = (g.order + 7) // 8
    return bytes([g.order]) + b"".join(r.to_bytes(width, "big") for r in rows)


def graph_from_code(code: bytes) -> Graph:
    """Inverse of :func:`canonical_form` (returns the canonical representative)."""
    n = code[0]
    width = (n + 7) // 8
    rows = [int.from_bytes(code[1 + i * width:1 + (i + 1) * width], "big") for i in range(n)]
    return from_masks(rows)


def canonical_graph(g: Graph) -> Graph:
    return graph_from_code(canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or degree_sequence(g) != degree_sequence(h):
        _check_bound(g)
        _check_bound(h)
        return False
    return canonical_form(g) == canonical_form(h)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return build_graph(g.order, ((perm[u], perm[v]) for u, v in g.edges()))
