"""Distance ideals of graphs.

Graphs are exchanged as graph6 strings. Report functions return the same
JSON records as the ``distideal`` command line tool, decoded to dicts.
"""

import json

from . import _core
from ._core import (
    GraphError,
    PolyError,
    atlas,
    canonical_graph6,
    determinant,
    distance_matrix,
    distance_snf,
    edges,
    enumerate_connected,
    enumerate_trees,
    forbidden_family,
    from_edges,
    lemma_ids,
    parse_graph_file,
    snf,
)

__all__ = [
    "GraphError",
    "PolyError",
    "atlas",
    "canonical_graph6",
    "determinant",
    "distance_matrix",
    "distance_snf",
    "edges",
    "enumerate_connected",
    "enumerate_trees",
    "forbidden_family",
    "from_edges",
    "ideal",
    "lemma_ids",
    "parse_graph_file",
    "phi",
    "run_lemma",
    "scan",
    "snf",
]


def ideal(graph6, i, rational=False, budget=200_000, seed=None):
    """Triviality verdict for the i-th distance ideal."""
    kw = {} if seed is None else {"seed": seed}
    return json.loads(_core.ideal_json(graph6, i, rational, budget, **kw))


def phi(graph6, rational=False, budget=200_000, seed=None):
    """Number of trivial distance ideals with the per-ideal verdicts."""
    kw = {} if seed is None else {"seed": seed}
    return json.loads(_core.phi_json(graph6, rational, budget, **kw))


def scan(graph6, family="F"):
    return json.loads(_core.scan_json(graph6, family))


def run_lemma(lemma_id, budget=200_000):
    return json.loads(_core.run_lemma_json(lemma_id, budget))
