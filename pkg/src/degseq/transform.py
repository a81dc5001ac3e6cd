"""2-switches, class sampling and enumeration, constructions and fixtures."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .graph_core import (
    CANONICAL_ORDER_BOUND,
    Graph,
    GraphError,
    build_graph,
    canonical_form,
    complement,
    from_masks,
    graph_from_code,
    is_clique_union,
)
from .recognize import normalize_signature


class TwoSwitch(NamedTuple):
    """Replace edges ``uv`` and ``xy`` by ``ux`` and ``vy``."""

    u: int
    v: int
    x: int
    y: int


def _switch_valid(masks, s: TwoSwitch) -> bool:
    u, v, x, y = s
    if len({u, v, x, y}) != 4:
        return False
    return (
        masks[u] >> v & 1
        and masks[x] >> y & 1
        and not masks[u] >> x & 1
        and not masks[v] >> y & 1
    )


def enumerate_two_switches(g: Graph) -> list[TwoSwitch]:
    """All valid ordered switches (symmetric forms are not merged)."""
    masks = g.masks
    arcs = [(u, v) for u in range(g.order) for v in g.neighbors(u)]
    out = []
    for u, v in arcs:
        for x, y in arcs:
            s = TwoSwitch(u, v, x, y)
            if _switch_valid(masks, s):
                out.append(s)
    return out


def _apply(masks: list, s: TwoSwitch):
    u, v, x, y = s
    masks[u] ^= (1 << v) | (1 << x)
    masks[v] ^= (1 << u) | (1 << y)
    masks[x] ^= (1 << y) | (1 << u)
    masks[y] ^= (1 << x) | (1 << v)


def apply_two_switch(g: Graph, s: TwoSwitch) -> Graph:
    s = TwoSwitch(*s)
    if not _switch_valid(g.masks, s):
        raise GraphError(f"{s} is not a valid 2-switch for this graph")
    masks = list(g.masks)
    _apply(masks, s)
    return from_masks(masks)


class _Walker:
    """Mutable state for a uniform random 2-switch walk."""

    def __init__(self, g: Graph, rng: random.Random):
        self.n = g.order
        self.masks = list(g.masks)
        self.arcs = [(u, v) for u in range(g.order) for v in g.neighbors(u)]
        self.index = {a: i for i, a in enumerate(self.arcs)}
        self.rng = rng

    def step(self):
        # rejection sampling over ordered arc pairs is uniform over valid switches
        arcs = self.arcs
        if not arcs:
            raise GraphError("graph has no edges to switch")
        for _ in range(64 * len(arcs)):
            u, v = arcs[self.rng.randrange(len(arcs))]
            x, y = arcs[self.rng.randrange(len(arcs))]
            s = TwoSwitch(u, v, x, y)
            if _switch_valid(self.masks, s):
                self._commit(s)
                return s
        valid = enumerate_two_switches(from_masks(self.masks))
        if not valid:
            raise GraphError("graph admits no 2-switch")
        s = valid[self.rng.randrange(len(valid))]
        self._commit(s)
        return s

    def _commit(self, s: TwoSwitch):
        u, v, x, y = s
        _apply(self.masks, s)
        for a, b, c, d in ((u, v, u, x), (x, y, x, u), (v, u, v, y), (y, x, y, v)):
            i = self.index.pop((a, b))
            self.arcs[i] = (c, d)
            self.index[(c, d)] = i

    def graph(self) -> Graph:
        return from_masks(self.masks)


def check_two_clique_class(sig) -> tuple[int, int]:
    sig = normalize_signature(sig)
    if len(sig) != 2:
        raise ValueError(f"expected a two-clique signature, got {sig}")
    m, n = sig
    if m < 2 or (m, n) == (2, 2):
        raise ValueError(f"class G{list(sig)} is empty")
    return m, n


def sample_member(sig, steps: int, seed) -> Graph:
    """Random class member by a seeded 2-switch walk from the clique union.

    If the walk ends on a clique union it keeps stepping until it leaves.
    The walk is not mixed to uniformity.
    """
    m, n = check_two_clique_class(sig)
    walker = _Walker(clique_union((m, n)), random.Random(seed))
    for _ in range(steps):
        walker.step()
    while is_clique_union(walker.graph()) is not None:
        walker.step()
    return walker.graph()


@dataclass(frozen=True)
class EnumerationBudget:
    max_classes: int = 1_000_000
    max_frontier: int = 1_000_000
    max_seconds: float = 3600.0

    def __post_init__(self):
        if self.max_classes <= 0 or self.max_frontier <= 0 or self.max_seconds <= 0:
            raise ValueError("budget limits must be positive")


@dataclass
class EnumerationResult:
    signature: tuple
    graphs: dict = field(default_factory=dict)  # canonical code -> representative
    partial: bool = False
    reason: Optional[str] = None

    def __len__(self):
        return len(self.graphs)

    def codes(self) -> list[bytes]:
        return sorted(self.graphs)

    def members(self) -> list[Graph]:
        return [self.graphs[c] for c in self.codes()]


def enumerate_class(sig, budget: Optional[EnumerationBudget] = None) -> EnumerationResult:
    """All isomorphism classes of ``G[sig]`` by BFS over 2-switches.

    Representatives are canonical graphs keyed by canonical code; the clique
    union itself is never reported.
    """
    sig = normalize_signature(sig)
    budget = budget or EnumerationBudget()
    if sum(sig) > CANONICAL_ORDER_BOUND:
        raise GraphError(f"order {sum(sig)} exceeds the canonical-form bound")
    deadline = time.monotonic() + budget.max_seconds
    start = clique_union(sig)
    base = canonical_form(start)
    seen = {base: start}
    frontier = [start]
    result = EnumerationResult(sig)
    while frontier:
        nxt = []
        for g in frontier:
            labeled = set()
            masks = g.masks
            # the four ordered forms of one switch collapse in this set
            for s in enumerate_two_switches(g):
                new = list(masks)
                _apply(new, s)
                labeled.add(tuple(new))
            for rows in labeled:
                h = from_masks(rows)
                code = canonical_form(h)
                if code in seen:
                    continue
                if len(seen) - 1 >= budget.max_classes:
                    result.partial, result.reason = True, "max_classes"
                    break
                rep = graph_from_code(code)
                seen[code] = rep
                nxt.append(rep)
            if result.partial or time.monotonic() > deadline:
                result.partial = True
                result.reason = result.reason or "max_seconds"
                break
        if result.partial:
            break
        if len(nxt) > budget.max_frontier:
            result.partial, result.reason = True, "max_frontier"
            break
        frontier = nxt
    del seen[base]
    result.graphs = dict(sorted(seen.items()))
    return result


# ---------------------------------------------------------------------------
# Constructions


def clique_union(sig) -> Graph:
    sig = normalize_signature(sig)
    edges = []
    offset = 0
    for p in sig:
        edges.extend((offset + i, offset + j) for i in range(p) for j in range(i + 1, p))
        offset += p
    return build_graph(offset, edges)


def _clique_edges(vertices):
    vs = list(vertices)
    return {(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]}


def twin_bridge_case1(m: int, n: int) -> Graph:
    """``K_m - uv`` and ``K_n - u'v'`` joined by the edges ``uu'`` and ``vv'``.

    Vertices ``0..m-1`` form the small clique (u=0, v=1), ``m..m+n-1`` the
    large one (u'=m, v'=m+1).
    """
    if m < 4 or n <= m:
        raise ValueError(
            f"case 1 needs n > m >= 4 (K_m minus an edge must stay 2-connected), got m={m}, n={n}"
        )
    edges = _clique_edges(range(m)) | _clique_edges(range(m, m + n))
    edges -= {(0, 1), (m, m + 1)}
    edges |= {(0, m), (1, m + 1)}
    return build_graph(m + n, edges)


TWIN_BRIDGE_ATTACHMENTS = ("adjacent", "non-adjacent")


def twin_bridge_case2_general(n: int, ends: tuple[int, int]) -> Graph:
    """``K_n - uv - u'v'`` joined to ``K_{n-1}`` at two of ``u, v, u', v'``.

    The large clique is ``0..n-1`` with ``u, v, u', v' = 0, 1, 2, 3``; ``ends``
    picks two of those four to attach to ``a = n`` and ``b = n + 1`` of the
    small clique ``n..2n-2``.
    """
    if n < 4:
        raise ValueError(f"case 2 needs n >= 4, got {n}")
    p, q = ends
    if p == q or not {p, q} <= {0, 1, 2, 3}:
        raise ValueError(f"attachment ends must be two of 0..3, got {ends}")
    m = n - 1
    edges = _clique_edges(range(n)) | _clique_edges(range(n, n + m))
    edges -= {(0, 1), (2, 3)}
    edges |= {(p, n), (q, n + 1)}
    return build_graph(n + m, edges)


def twin_bridge_case2(n: int, attach: str) -> Graph:
    """Case 2 twin bridge with an adjacent (u, u') or non-adjacent (u, v) attachment pair."""
    if attach == "adjacent":
        return twin_bridge_case2_general(n, (0, 2))
    if attach == "non-adjacent":
        return twin_bridge_case2_general(n, (0, 1))
    raise ValueError(f"attachment must be one of {TWIN_BRIDGE_ATTACHMENTS}, got {attach!r}")


def pendant_family(n: int) -> Graph:
    """``K_n`` minus the edge ``01`` with a leaf hung on each of 0 and 1."""
    if n < 4:
        raise ValueError(f"pendant family needs n >= 4, got {n}")
    edges = _clique_edges(range(n)) - {(0, 1)}
    edges |= {(0, n), (1, n + 1)}
    return build_graph(n + 2, edges)


# ---------------------------------------------------------------------------
# Fixtures


def generalized_petersen(k: int, step: int) -> Graph:
    edges = []
    for i in range(k):
        edges.append((i, (i + 1) % k))
        edges.append((i, k + i))
        edges.append((k + i, k + (i + step) % k))
    return build_graph(2 * k, edges)


def _icosahedron() -> Graph:
    # 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom
    edges = []
    for i in range(5):
        up, up_next = 1 + i, 1 + (i + 1) % 5
        lo, lo_next = 6 + i, 6 + (i + 1) % 5
        edges += [(0, up), (up, up_next), (11, lo), (lo, lo_next), (up, lo), (up_next, lo)]
    return build_graph(12, edges)


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def complete(k: int) -> Graph:
    return build_graph(k, _clique_edges(range(k)))


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


_FIXTURES = {
    "cube": lambda: generalized_petersen(4, 1),
    "icosahedron": _icosahedron,
    "dodecahedron": lambda: generalized_petersen(10, 2),
    "petersen": lambda: generalized_petersen(5, 2),
    "prism": lambda: complement(cycle(6)),
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "clique_union": clique_union,
}

FIXTURE_NAMES = tuple(_FIXTURES)


def fixture(name: str, *args) -> Graph:
    """Named graph with a fixed labeling, e.g. ``fixture("cycle", 6)``."""
    try:
        make = _FIXTURES[name]
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}") from None
    return make(*args)
