"""JSON report documents (schema version 1)."""

from __future__ import annotations

import json

SCHEMA_VERSION = 1

_nullable_int = {"type": ["integer", "null"]}
_nullable_bool = {"type": ["boolean", "null"]}
_int_list = {"type": "array", "items": {"type": "integer"}}
_signature = {"type": ["array", "null"], "items": {"type": "integer", "minimum": 1}}

MEMBERSHIP = {
    "type": "object",
    "required": ["class", "signature", "excluded_as_base"],
    "properties": {
        "class": {"enum": ["G", "complement", "neither"]},
        "signature": _signature,
        "excluded_as_base": {"type": "boolean"},
    },
    "additionalProperties": False,
}

_header = {
    "schema_version": {"const": SCHEMA_VERSION},
}

SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "degseq report document",
    "oneOf": [
        {
            "type": "object",
            "required": ["schema_version", "kind", "membership"],
            "properties": {**_header, "kind": {"const": "membership"}, "membership": MEMBERSHIP,
                           "order": {"type": "integer"}},
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": [
                "schema_version", "kind", "order", "size", "membership", "connected",
                "cut_vertices", "bridges", "prop3_case", "bipartite", "parts", "bipartite_case",
                "diameter", "hamiltonian", "hamiltonian_cycle", "traceable", "hamiltonian_path",
                "pancyclic", "missing_cycle_length", "independence_number", "predicates",
                "violations", "findings",
            ],
            "properties": {
                **_header,
                "kind": {"const": "property_report"},
                "order": {"type": "integer", "minimum": 0},
                "size": {"type": "integer", "minimum": 0},
                "membership": MEMBERSHIP,
                "connected": {"type": "boolean"},
                "cut_vertices": {"type": "integer"},
                "bridges": {"type": "integer"},
                "prop3_case": {"enum": [1, 2, 3, 4, 5, None]},
                "bipartite": {"type": "boolean"},
                "parts": {"type": ["array", "null"], "items": _int_list},
                "bipartite_case": {"enum": [1, 2, 3, None]},
                "diameter": _nullable_int,
                "hamiltonian": _nullable_bool,
                "hamiltonian_cycle": {"type": ["array", "null"], "items": {"type": "integer"}},
                "traceable": _nullable_bool,
                "hamiltonian_path": {"type": ["array", "null"], "items": {"type": "integer"}},
                "pancyclic": _nullable_bool,
                "missing_cycle_length": _nullable_int,
                "independence_number": _nullable_int,
                "predicates": {
                    "type": "object",
                    "required": ["dirac", "ore", "holton_sheehan", "rahman_kaykobad",
                                 "bondy_premise", "moon_moser", "caro_wei_bound"],
                    "properties": {
                        "dirac": {"type": "boolean"},
                        "ore": {"type": "boolean"},
                        "holton_sheehan": {"type": "boolean"},
                        "rahman_kaykobad": {"type": "boolean"},
                        "bondy_premise": _nullable_bool,
                        "moon_moser": _nullable_bool,
                        "caro_wei_bound": {"type": "string", "pattern": r"^\d+(/\d+)?$"},
                    },
                    "additionalProperties": False,
                },
                "violations": {"type": "array", "items": {"type": "string"}},
                "findings": {"type": "array", "items": {"type": "string"}},
            },
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": ["schema_version", "kind", "campaign", "mode", "seed", "graphs_tested",
                         "cells", "counterexamples"],
            "properties": {
                **_header,
                "kind": {"const": "hunt_report"},
                "campaign": {"enum": ["traceability", "diam4"]},
                "mode": {"enum": ["exhaustive", "random"]},
                "seed": _nullable_int,
                "graphs_tested": {"type": "integer", "minimum": 0},
                "cells": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["signature", "mode", "seed", "budget", "graphs_tested",
                                     "complete", "reason"],
                        "properties": {
                            "signature": _int_list,
                            "mode": {"enum": ["exhaustive", "random"]},
                            "seed": _nullable_int,
                            "budget": _nullable_int,
                            "graphs_tested": {"type": "integer", "minimum": 0},
                            "complete": {"type": "boolean"},
                            "reason": {"type": ["string", "null"]},
                        },
                        "additionalProperties": False,
                    },
                },
                "counterexamples": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["canonical", "graph6", "signature", "property", "severity"],
                        "properties": {
                            "canonical": {"type": "string", "pattern": "^[0-9a-f]+$"},
                            "graph6": {"type": "string"},
                            "signature": _int_list,
                            "property": {"type": "string"},
                            "severity": {"enum": ["theorem-violation", "open-question"]},
                        },
                        "additionalProperties": False,
                    },
                },
            },
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": ["schema_version", "kind", "signature", "classes", "partial", "reason",
                         "graphs"],
            "properties": {
                **_header,
                "kind": {"const": "enumeration"},
                "signature": _int_list,
                "classes": {"type": "integer", "minimum": 0},
                "partial": {"type": "boolean"},
                "reason": {"type": ["string", "null"]},
                "graphs": {"type": "array", "items": {"type": "string"}},
            },
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": ["schema_version", "kind", "source", "product", "n", "source_optimum",
                         "product_optimum", "extracted", "ratio", "holds"],
            "properties": {
                **_header,
                "kind": {"const": "reduction"},
                "source": {"type": "string"},
                "product": {"type": "string"},
                "n": {"type": "integer"},
                "source_optimum": {"type": "integer"},
                "product_optimum": {"type": "integer"},
                "extracted": {"type": "integer"},
                "ratio": {"type": "string"},
                "holds": {"type": "boolean"},
            },
            "additionalProperties": False,
        },
    ],
}


def dumps(doc: dict) -> str:
    """Deterministic serialization: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def validate(doc: dict):
    """Validate against :data:`SCHEMA` (needs the optional ``jsonschema`` package)."""
    import jsonschema

    jsonschema.validate(doc, SCHEMA)
