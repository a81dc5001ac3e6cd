"""Connectivity, blocks, diameter and bipartiteness."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Union

from .graph_core import Graph, connected_components

UNBOUNDED = math.inf

# (cut-vertices, bridges) -> case label for two-clique G-class members
PROP3_CASES = {(0, 0): 1, (1, 0): 2, (2, 1): 3, (2, 2): 4, (3, 4): 5}


@dataclass(frozen=True)
class TheoremViolation:
    """Returned instead of a case label when no admissible case matches."""

    theorem: str
    detail: str

    def __bool__(self):
        return False


@dataclass(frozen=True)
class BlockDecomposition:
    cut_vertices: frozenset
    bridges: frozenset  # of (u, v) with u < v
    blocks: tuple  # of frozensets of vertices

    @property
    def counts(self) -> tuple[int, int]:
        return len(self.cut_vertices), len(self.bridges)


@dataclass(frozen=True)
class BipartiteCase:
    label: int
    parts: tuple


@dataclass(frozen=True)
class Bipartition:
    parts: Optional[tuple] = None
    odd_cycle: Optional[list] = field(default=None)

    @property
    def is_bipartite(self) -> bool:
        return self.parts is not None


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Cut-vertices, bridges and blocks from one iterative low-link DFS."""
    n = g.order
    disc = [-1] * n
    low = [0] * n
    cuts = set()
    bridges = set()
    blocks = []
    counter = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        if not g.neighbors(root):
            blocks.append(frozenset([root]))
            disc[root] = counter
            counter += 1
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        edge_stack = []
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if u == parent:
                    continue
                if disc[u] < 0:
                    disc[u] = low[u] = counter
                    counter += 1
                    edge_stack.append((v, u))
                    stack.append((u, v, iter(g.neighbors(u))))
                    advanced = True
                    break
                if disc[u] < disc[v]:
                    low[v] = min(low[v], disc[u])
                    edge_stack.append((v, u))
            if advanced:
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                block = set()
                while True:
                    a, b = edge_stack.pop()
                    block.add(a)
                    block.add(b)
                    if (a, b) == (parent, v):
                        break
                blocks.append(frozenset(block))
                if len(block) == 2:
                    bridges.add((min(parent, v), max(parent, v)))
                if stack[-1][1] >= 0:
                    cuts.add(parent)
                else:
                    root_children += 1
        if root_children > 1:
            cuts.add(root)
    blocks.sort(key=lambda b: sorted(b))
    return BlockDecomposition(frozenset(cuts), frozenset(bridges), tuple(blocks))


def prop3_case(g: Graph, decomposition: Optional[BlockDecomposition] = None):
    """Case label 1..5 from the (cut-vertex, bridge) counts, or a TheoremViolation."""
    dec = decomposition or block_decomposition(g)
    counts = dec.counts
    label = PROP3_CASES.get(counts)
    if label is None:
        return TheoremViolation(
            "cut-vertex/bridge table",
            f"{counts[0]} cut-vertices and {counts[1]} bridges is not an admissible pair",
        )
    return label


def eccentricities(g: Graph) -> list:
    out = []
    for s in range(g.order):
        dist = [-1] * g.order
        dist[s] = 0
        queue = deque([s])
        seen = 1
        far = 0
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    far = dist[u]
                    seen += 1
                    queue.append(u)
        out.append(far if seen == g.order else UNBOUNDED)
    return out


def diameter(g: Graph) -> Union[int, float]:
    """Largest shortest-path distance; ``UNBOUNDED`` when disconnected."""
    if g.order == 0:
        return 0
    return max(eccentricities(g))


def distance_matrix(g: Graph) -> list[list]:
    rows = []
    for s in range(g.order):
        dist = [UNBOUNDED] * g.order
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if dist[u] is UNBOUNDED:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        rows.append(dist)
    return rows


def bipartition(g: Graph) -> Bipartition:
    """Two-colouring by BFS layers, or an odd cycle certifying there is none."""
    color = [-1] * g.order
    parent = [-1] * g.order
    for root in range(g.order):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    parent[u] = v
                    queue.append(u)
                elif color[u] == color[v]:
                    return Bipartition(None, _odd_cycle(parent, v, u))
    a = tuple(v for v in range(g.order) if color[v] == 0)
    b = tuple(v for v in range(g.order) if color[v] == 1)
    if len(a) > len(b):
        a, b = b, a
    return Bipartition((a, b))


def _odd_cycle(parent, v, u):
    # v and u share a colour and an edge; join their BFS-tree paths
    path_v = [v]
    while parent[path_v[-1]] >= 0:
        path_v.append(parent[path_v[-1]])
    path_u = [u]
    while parent[path_u[-1]] >= 0:
        path_u.append(parent[path_u[-1]])
    anc_u = set(path_u)
    lca_index = next(i for i, x in enumerate(path_v) if x in anc_u)
    lca = path_v[lca_index]
    head = path_v[:lca_index + 1]
    tail = path_u[:path_u.index(lca)]
    return head + tail[::-1]


def bipartite_case(g: Graph, parts, sig):
    """Which bipartite case a bipartite ``G[m, n]`` member falls in.

    Returns a :class:`BipartiteCase`, or a :class:`TheoremViolation` when the
    part sizes fit none of the three cases.
    """
    m, n = sorted(sig)
    v1, v2 = sorted(parts, key=len)
    a, b = len(v1), len(v2)
    matches = []
    if a == b and n == m + 2 and m % 2 == 0 and n % 2 == 0:
        matches.append(1)
    if a == m and b == n and n == m + 1:
        matches.append(2)
    if a == b and m == n:
        matches.append(3)
    if len(matches) != 1:
        return TheoremViolation(
            "bipartite classification",
            f"parts {a},{b} with (m, n)=({m}, {n}) match cases {matches}",
        )
    return BipartiteCase(matches[0], (tuple(v1), tuple(v2)))
