"""Stability of direct products of graphs."""

import json

from ._pairstab import (
    BoundExceeded,
    Graph,
    InvalidInput,
    are_isomorphic,
    automorphism_generators,
    automorphism_order,
    boolean_square,
    canonical_id,
    complete,
    cycle,
    direct_product,
    double_cover,
    gamma_star,
    is_bipartite,
    is_compatible,
    is_connected,
    is_r_thin,
    layer_subgroup_order,
    length_sets,
    parse_graph6,
    path,
    verify_worked_examples,
)
from . import _pairstab

__all__ = [
    "BoundExceeded",
    "Graph",
    "InvalidInput",
    "are_isomorphic",
    "automorphism_generators",
    "automorphism_order",
    "boolean_square",
    "canonical_id",
    "complete",
    "cycle",
    "direct_product",
    "double_cover",
    "gamma_star",
    "is_bipartite",
    "is_compatible",
    "is_connected",
    "is_r_thin",
    "layer_subgroup_order",
    "length_sets",
    "pair_stability",
    "parse_graph6",
    "path",
    "scan",
    "twist",
    "verify_worked_examples",
]


def pair_stability(g, s):
    """Verdict for the pair (g, s) as a dict."""
    return json.loads(_pairstab._pair_stability_json(g, s))


def twist(spec):
    """Builds the twist described by a spec dict (or JSON string)."""
    text = spec if isinstance(spec, str) else json.dumps(spec)
    return parse_graph6(_pairstab._twist_json(text))


def scan(graphs=(), max_order=6, n_min=3, n_max=8, jobs=1, theorems=True, conjectures=True):
    """Corpus scan; with no graphs, uses every connected graph up to max_order."""
    return json.loads(
        _pairstab._scan_json(list(graphs), max_order, n_min, n_max, jobs, theorems, conjectures)
    )
