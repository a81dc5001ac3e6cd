"""Graphs degree-equivalent to a disjoint union of cliques, and their complements."""

from ._kernels import BACKEND_NAME
from .formats import FormatError, emit_graph, from_graph6, parse_graph, to_graph6
from .graph_core import (
    Graph,
    GraphError,
    build_graph,
    canonical_form,
    complement,
    degree_sequence,
    is_clique_union,
    is_isomorphic,
)
from .hunt import certify, hunt_diameter4, hunt_traceability
from .recognize import Membership, classify, is_member_complement, is_member_G, signature_from_degrees
from .reduction import build_reduction, verify_two_approx
from .transform import apply_two_switch, enumerate_class, fixture, sample_member

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME", "FormatError", "Graph", "GraphError", "Membership", "apply_two_switch",
    "build_graph", "build_reduction", "canonical_form", "certify", "classify", "complement",
    "degree_sequence", "emit_graph", "enumerate_class", "fixture", "from_graph6",
    "hunt_diameter4", "hunt_traceability", "is_clique_union", "is_isomorphic",
    "is_member_G", "is_member_complement", "parse_graph", "sample_member",
    "signature_from_degrees", "to_graph6", "verify_two_approx",
]
