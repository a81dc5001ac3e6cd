"""Membership tests for the clique-union degree classes and their complements.

A graph belongs to ``G[p1,...,pk]`` when it has the degree multiset of the
disjoint union of cliques ``K_p1 + ... + K_pk`` but is not that union itself.
The complement class is defined for two cliques only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph_core import DegreeMultiset, Graph, complement, degree_sequence, is_clique_union

ClassSignature = tuple  # sorted tuple of clique sizes

G_CLASS = "G"
COMPLEMENT_CLASS = "complement"
NEITHER = "neither"


def signature_from_degrees(d: DegreeMultiset) -> Optional[ClassSignature]:
    """Clique sizes implied degree by degree, or None.

    Degree ``p`` with multiplicity ``c`` requires ``c`` to be a multiple of
    ``p + 1``; it then contributes ``c / (p + 1)`` cliques of size ``p + 1``.
    """
    parts = []
    for p, c in d.pairs:
        if c % (p + 1):
            return None
        parts.extend([p + 1] * (c // (p + 1)))
    if not parts:
        return None
    return tuple(sorted(parts))


def required_degrees(sig: ClassSignature) -> DegreeMultiset:
    counts = {}
    for p in sig:
        counts[p - 1] = counts.get(p - 1, 0) + p
    return DegreeMultiset(tuple(sorted(counts.items())))


def normalize_signature(sig) -> ClassSignature:
    sig = tuple(sorted(int(p) for p in sig))
    if not sig or sig[0] < 1:
        raise ValueError(f"invalid class signature {sig!r}")
    return sig


def is_member_G(g: Graph, sig) -> bool:
    """Degrees match ``sig`` and ``g`` is not the clique union itself (O(V + E))."""
    sig = normalize_signature(sig)
    if g.order != sum(sig) or degree_sequence(g) != required_degrees(sig):
        return False
    return is_clique_union(g) != sig


def is_member_complement(g: Graph, m: int, n: int) -> bool:
    """True iff ``g`` is the complement of a member of ``G[m, n]``."""
    if g.order != m + n:
        return False
    want = {}
    want[m] = want.get(m, 0) + n
    want[n] = want.get(n, 0) + m
    if degree_sequence(g) != DegreeMultiset(tuple(sorted(want.items()))):
        return False
    return is_member_G(complement(g), (m, n))


@dataclass(frozen=True)
class Membership:
    kind: str
    signature: Optional[ClassSignature] = None
    excluded_as_base: bool = False

    def __post_init__(self):
        if (self.signature is None) != (self.kind == NEITHER):
            raise ValueError("signature must be present iff kind is not 'neither'")

    @property
    def two_clique(self) -> Optional[tuple[int, int]]:
        if self.signature is not None and len(self.signature) == 2:
            return self.signature
        return None


def classify(g: Graph) -> Membership:
    """Report the G-class (any number of cliques) or two-clique complement class."""
    excluded = False
    sig = signature_from_degrees(degree_sequence(g))
    if sig is not None:
        if is_clique_union(g) != sig:
            return Membership(G_CLASS, sig)
        excluded = True
    pair = complement_pair(degree_sequence(g))
    if pair is not None:
        if is_member_G(complement(g), pair):
            return Membership(COMPLEMENT_CLASS, pair)
        excluded = True
    return Membership(NEITHER, None, excluded)


def complement_pair(d: DegreeMultiset) -> Optional[tuple[int, int]]:
    """The ``(m, n)`` whose complement class has degree multiset ``d``, if any."""
    pairs = d.pairs
    if len(pairs) == 1:
        deg, count = pairs[0]
        if deg >= 1 and count == 2 * deg:
            return (deg, deg)
    elif len(pairs) == 2:
        (a, ca), (b, cb) = pairs
        if a >= 1 and ca == b and cb == a:
            return (a, b)
    return None
