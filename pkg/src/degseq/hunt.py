"""Certification battery and counterexample search campaigns.

``certify`` runs every structural and cycle check on one graph and flags any
proven result whose conclusion fails.  The campaigns sweep whole classes
(exhaustively or by random 2-switch walks) looking for non-traceable members
of ``G[m, n]`` or diameter-4 members of the complement classes.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

from .cycles import (
    HAMILTONIAN_ORDER_BOUND,
    PANCYCLIC_ORDER_BOUND,
    PredicateReport,
    hamiltonian_cycle,
    hamiltonian_path,
    is_pancyclic,
    literature_predicates,
)
from .formats import from_graph6, to_graph6
from .graph_core import CANONICAL_ORDER_BOUND, Graph, canonical_form, complement, is_isomorphic
from .recognize import COMPLEMENT_CLASS, G_CLASS, Membership, classify
from .reduction import MIS_ORDER_BOUND, max_independent_set_exact
from .structure import (
    UNBOUNDED,
    TheoremViolation,
    bipartite_case,
    bipartition,
    block_decomposition,
    diameter,
    is_connected,
    prop3_case,
)
from .transform import EnumerationBudget, check_two_clique_class, complete_bipartite, enumerate_class, sample_member

SCHEMA_VERSION = 1

THEOREM_VIOLATION = "theorem-violation"
OPEN_QUESTION = "open-question"

TRACEABILITY = "traceability"
DIAMETER4 = "diam4"
CAMPAIGNS = (TRACEABILITY, DIAMETER4)

EXHAUSTIVE = "exhaustive"
RANDOM = "random"


@dataclass
class PropertyReport:
    order: int
    size: int
    membership: Membership
    connected: bool
    cut_vertices: int
    bridges: int
    prop3_case: Optional[int]
    bipartite: bool
    parts: Optional[list]
    bipartite_case: Optional[int]
    diameter: Optional[int]  # None when disconnected
    hamiltonian: Optional[bool]  # None when out of solver range
    hamiltonian_cycle: Optional[list]
    traceable: Optional[bool]
    hamiltonian_path: Optional[list]
    pancyclic: Optional[bool]
    missing_cycle_length: Optional[int]
    independence_number: Optional[int]
    predicates: PredicateReport
    violations: list = field(default_factory=list)
    findings: list = field(default_factory=list)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["membership"] = membership_to_dict(self.membership)
        pred = asdict(self.predicates)
        pred["caro_wei_bound"] = str(self.predicates.caro_wei_bound)
        d["predicates"] = pred
        return {"schema_version": SCHEMA_VERSION, "kind": "property_report", **d}

    @classmethod
    def from_dict(cls, d: dict) -> "PropertyReport":
        d = {k: v for k, v in d.items() if k not in ("schema_version", "kind")}
        pred = dict(d["predicates"])
        pred["caro_wei_bound"] = Fraction(pred["caro_wei_bound"])
        d["predicates"] = PredicateReport(**pred)
        d["membership"] = membership_from_dict(d["membership"])
        return cls(**d)


def membership_to_dict(m: Membership) -> dict:
    return {
        "class": m.kind,
        "signature": list(m.signature) if m.signature is not None else None,
        "excluded_as_base": m.excluded_as_base,
    }


def membership_from_dict(d: dict) -> Membership:
    sig = tuple(d["signature"]) if d["signature"] is not None else None
    return Membership(d["class"], sig, d["excluded_as_base"])


def certify(g: Graph) -> PropertyReport:
    """Run the full property battery; out-of-range fields are None, never guessed."""
    mem = classify(g)
    connected = is_connected(g)
    dec = block_decomposition(g)
    cuts, bridges = dec.counts
    bp = bipartition(g)
    diam = diameter(g)
    preds = literature_predicates(g)
    violations = []
    findings = []

    hc = hp = None
    hamiltonian = traceable = None
    if g.order <= HAMILTONIAN_ORDER_BOUND:
        w = hamiltonian_cycle(g)
        hamiltonian = w is not None
        hc = list(w.vertices) if w else None
        w = hamiltonian_path(g)
        traceable = w is not None
        hp = list(w.vertices) if w else None
    pancyclic = missing = None
    if g.order <= PANCYCLIC_ORDER_BOUND:
        pc = is_pancyclic(g)
        pancyclic, missing = pc.pancyclic, pc.missing_length
    alpha = len(max_independent_set_exact(g)) if g.order <= MIS_ORDER_BOUND else None

    if hamiltonian and traceable is False:
        violations.append("internal: Hamiltonian but not traceable")

    pair = mem.two_clique
    case3 = bcase = None
    if mem.kind == G_CLASS and pair is not None:
        m, n = pair
        if not connected:
            violations.append("G[m,n] member is disconnected")
        case = prop3_case(g, dec)
        if isinstance(case, TheoremViolation):
            violations.append(f"{case.theorem}: {case.detail}")
        else:
            case3 = case
        if cuts:
            if traceable is False:
                violations.append("G[m,n] member with a cut-vertex is not traceable")
            if hamiltonian:
                violations.append("G[m,n] member with a cut-vertex is Hamiltonian")
        if m == n:
            if cuts or not connected:
                violations.append("G[n,n] member is not 2-connected")
            if hamiltonian is False:
                violations.append("G[n,n] member is not Hamiltonian")
        if diam > 4:
            violations.append(f"G[m,n] member has diameter {_fmt_diam(diam)} > 4")
        if bp.is_bipartite:
            bc = bipartite_case(g, bp.parts, pair)
            if isinstance(bc, TheoremViolation):
                violations.append(f"{bc.theorem}: {bc.detail}")
            else:
                bcase = bc.label
                if bcase in (1, 3) and hamiltonian is False:
                    violations.append(f"bipartite case {bcase} member is not Hamiltonian")
                if bcase == 2 and traceable is False:
                    violations.append("bipartite case 2 member is not traceable")
        if traceable is False:
            findings.append("non-traceable G[m,n] member")
    elif mem.kind == COMPLEMENT_CLASS:
        m, n = pair
        if m != n and (cuts or not connected):
            violations.append("complement-class member with m != n is not 2-connected")
        if m == n and pancyclic is False:
            violations.append(f"complement-class member with m = n misses cycle length {missing}")
        if abs(m - n) == 1 and traceable is False:
            violations.append("complement-class member with |m - n| = 1 is not traceable")
        if bp.is_bipartite:
            violations.append("complement-class member is bipartite")
        if diam > 4:
            violations.append(f"complement-class member has diameter {_fmt_diam(diam)} > 4")
        elif diam == 4:
            findings.append("diameter-4 complement-class member")

    if hamiltonian is False:
        for name in ("dirac", "ore", "holton_sheehan", "moon_moser"):
            if getattr(preds, name):
                violations.append(f"predicate {name} holds but the graph is not Hamiltonian")
    if traceable is False and preds.rahman_kaykobad:
        violations.append("predicate rahman_kaykobad holds but the graph is not traceable")
    if preds.bondy_premise and pancyclic is False:
        half = g.order // 2
        if g.order % 2 or not is_isomorphic(g, complete_bipartite(half, half)):
            violations.append("Bondy premise holds but the graph is neither pancyclic nor K_{n/2,n/2}")
    if alpha is not None and preds.caro_wei_bound > alpha:
        violations.append(f"Caro-Wei bound {preds.caro_wei_bound} exceeds independence number {alpha}")

    return PropertyReport(
        order=g.order,
        size=g.size,
        membership=mem,
        connected=connected,
        cut_vertices=cuts,
        bridges=bridges,
        prop3_case=case3,
        bipartite=bp.is_bipartite,
        parts=[list(p) for p in bp.parts] if bp.is_bipartite else None,
        bipartite_case=bcase,
        diameter=None if diam is UNBOUNDED else diam,
        hamiltonian=hamiltonian,
        hamiltonian_cycle=hc,
        traceable=traceable,
        hamiltonian_path=hp,
        pancyclic=pancyclic,
        missing_cycle_length=missing,
        independence_number=alpha,
        predicates=preds,
        violations=violations,
        findings=findings,
    )


def _fmt_diam(d):
    return "unbounded" if d is UNBOUNDED else str(d)


# ---------------------------------------------------------------------------
# Campaigns


@dataclass
class Counterexample:
    canonical: str  # hex of the canonical code
    graph6: str
    signature: list
    property: str
    severity: str


@dataclass
class Cell:
    signature: list
    mode: str
    seed: Optional[int]
    budget: Optional[int]
    graphs_tested: int
    complete: bool
    reason: Optional[str] = None


@dataclass
class HuntReport:
    campaign: str
    mode: str
    seed: Optional[int]
    cells: list
    counterexamples: list

    @property
    def graphs_tested(self) -> int:
        return sum(c.graphs_tested for c in self.cells)

    @property
    def theorem_violations(self) -> list:
        return [c for c in self.counterexamples if c.severity == THEOREM_VIOLATION]

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "hunt_report",
            "campaign": self.campaign,
            "mode": self.mode,
            "seed": self.seed,
            "graphs_tested": self.graphs_tested,
            "cells": [asdict(c) for c in self.cells],
            "counterexamples": [asdict(c) for c in self.counterexamples],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "HuntReport":
        return cls(
            campaign=d["campaign"],
            mode=d["mode"],
            seed=d["seed"],
            cells=[Cell(**c) for c in d["cells"]],
            counterexamples=[Counterexample(**c) for c in d["counterexamples"]],
        )


def auto_signatures(max_order: int) -> list[tuple[int, int]]:
    """Every non-empty two-clique class with ``m + n <= max_order``."""
    return [
        (m, n)
        for m in range(2, max_order)
        for n in range(m, max_order - m + 1)
        if (m, n) != (2, 2)
    ]


def _check(campaign: str, g: Graph) -> tuple[list, list]:
    """(open-question hits, theorem violations) for one tested graph."""
    report = certify(g)
    hits = []
    if campaign == TRACEABILITY:
        if report.traceable is False:
            hits.append("not traceable")
    elif report.diameter == 4:
        hits.append("diameter 4")
    return hits, list(report.violations)


def _record(campaign, g, sig, found: dict):
    hits, violations = _check(campaign, g)
    if not hits and not violations:
        return
    code = canonical_form(g).hex()
    g6 = to_graph6(g)
    for prop in hits:
        found[(code, prop)] = Counterexample(code, g6, list(sig), prop, OPEN_QUESTION)
    for prop in violations:
        found[(code, prop)] = Counterexample(code, g6, list(sig), prop, THEOREM_VIOLATION)


def _tested_graph(campaign, member: Graph) -> Graph:
    return member if campaign == TRACEABILITY else complement(member)


def run_cell(campaign: str, sig, mode: str, budget: Optional[int], seed: Optional[int],
             max_seconds: float = 3600.0) -> tuple[Cell, list]:
    m, n = check_two_clique_class(sig)
    found = {}
    if mode == EXHAUSTIVE:
        if m + n > CANONICAL_ORDER_BOUND:
            return Cell([m, n], mode, seed, budget, 0, False, "order bound exceeded"), []
        eb = EnumerationBudget(max_classes=budget or 1_000_000, max_seconds=max_seconds)
        result = enumerate_class((m, n), eb)
        members = result.members()
        for g in members:
            _record(campaign, _tested_graph(campaign, g), (m, n), found)
        cell = Cell([m, n], mode, seed, budget, len(members), not result.partial, result.reason)
    elif mode == RANDOM:
        draws = budget or 100
        rng = random.Random(f"{seed}:{m}:{n}")
        steps = 8 * (m + n)
        codes = set()
        for _ in range(draws):
            g = sample_member((m, n), steps, rng.getrandbits(64))
            code = canonical_form(g)
            if code in codes:
                continue
            codes.add(code)
            _record(campaign, _tested_graph(campaign, g), (m, n), found)
        cell = Cell([m, n], mode, seed, budget, len(codes), True, None)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return cell, list(found.values())


def _run_cell_args(args):
    return run_cell(*args)


def recertify(campaign: str, cx: Counterexample) -> bool:
    """Re-run the relevant checker on a freshly decoded copy."""
    g = from_graph6(cx.graph6)
    hits, violations = _check(campaign, g)
    return cx.property in (hits if cx.severity == OPEN_QUESTION else violations)


def run_campaign(campaign: str, signatures, mode: str = EXHAUSTIVE, budget: Optional[int] = None,
                 seed: Optional[int] = 0, jobs: Optional[int] = None,
                 max_seconds: float = 3600.0) -> HuntReport:
    if campaign not in CAMPAIGNS:
        raise ValueError(f"unknown campaign {campaign!r}")
    jobs = jobs or int(os.environ.get("DEGSEQ_JOBS", "1"))
    work = [(campaign, tuple(sorted(s)), mode, budget, seed, max_seconds) for s in signatures]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_cell_args, work))
    else:
        results = [run_cell(*w) for w in work]
    cells = [cell for cell, _ in results]
    found = [cx for _, cxs in results for cx in cxs]
    confirmed = [cx for cx in found if recertify(campaign, cx)]
    if len(confirmed) != len(found):
        raise RuntimeError("a counterexample failed to re-certify from its serialized form")
    confirmed.sort(key=lambda c: (c.canonical, c.property))
    return HuntReport(campaign, mode, seed, cells, confirmed)


def hunt_traceability(signatures, mode=EXHAUSTIVE, budget=None, seed=0, jobs=None) -> HuntReport:
    return run_campaign(TRACEABILITY, signatures, mode, budget, seed, jobs)


def hunt_diameter4(signatures, mode=EXHAUSTIVE, budget=None, seed=0, jobs=None) -> HuntReport:
    return run_campaign(DIAMETER4, signatures, mode, budget, seed, jobs)
