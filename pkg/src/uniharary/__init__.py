"""Exact additively weighted Harary index for unicyclic graphs.

Computes the index with exact rationals, implements the rewrites that push a
unicyclic graph towards the extremal cycle-star / cycle-path graphs, and
checks the extremal claims by exhaustive enumeration for small ``n``.
"""

from uniharary.rational import Rational, harmonic, rational_arith, rational_cmp
from uniharary.graph import (
    Graph,
    all_pairs_distances,
    build_graph,
    classify,
    cycle_path,
    cycle_star,
    decompose_unicyclic,
    is_cycle_path,
    is_cycle_star,
    make_cycle,
    make_cycle_path,
    make_cycle_star,
)
from uniharary.indices import (
    additively_weighted_harary,
    classical_indices,
    cp3_closed_form,
    cs3_closed_form,
    cycle_h_a_closed_form,
    lemma22_margin,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "Rational",
    "additively_weighted_harary",
    "all_pairs_distances",
    "build_graph",
    "classical_indices",
    "classify",
    "cp3_closed_form",
    "cs3_closed_form",
    "cycle_h_a_closed_form",
    "cycle_path",
    "cycle_star",
    "decompose_unicyclic",
    "harmonic",
    "is_cycle_path",
    "is_cycle_star",
    "lemma22_margin",
    "make_cycle",
    "make_cycle_path",
    "make_cycle_star",
    "rational_arith",
    "rational_cmp",
]
