"""Exact capacities and bounds for systems of coloring channels.

A coloring channel keeps the letters in one subset of the alphabet and
deletes the rest, preserving order.  A system of such channels maps a word
to its tuple of per-channel views; this package computes how many distinct
view tuples length-n words can produce, exactly where a closed form exists
and by sandwich bounds otherwise, and checks everything against exhaustive
enumeration.
"""

from .bounds import bounds, bounds_cycle, bounds_general, subgraph_monotonic_check
from .capacity import (
    CapacityResult, capacity, capacity_path, capacity_single, capacity_sunflower,
    capacity_two_sets, chebyshev_U, chebyshev_W, entropy, path_profile,
)
from .channels import ChannelSystem, apply_channel, apply_system, confusable
from .oracle import (
    BudgetExceededError, CompositionCount, EnumerationReport, ReconstructionError,
    SweepResult, composition_count_path, composition_count_sunflower,
    count_outputs, empirical_rate_sweep, reconstruct_view, verify_pairs_equality,
)
from .systems import (
    Cycle, FullClique, General, PairsGraph, Path, Reducible, Separable,
    SingleChannel, Sunflower, SystemClass, TwoSets, classify, clique_number,
    edge_clique_cover, edge_system, max_clique, pairs_graph, remove_dominated,
    restrict_alphabet, separable_split,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CapacityResult",
    "ChannelSystem",
    "CompositionCount",
    "Cycle",
    "EnumerationReport",
    "FullClique",
    "General",
    "PairsGraph",
    "Path",
    "Reducible",
    "ReconstructionError",
    "Separable",
    "SingleChannel",
    "Sunflower",
    "SweepResult",
    "SystemClass",
    "TwoSets",
    "apply_channel",
    "apply_system",
    "bounds",
    "bounds_cycle",
    "bounds_general",
    "capacity",
    "capacity_path",
    "capacity_single",
    "capacity_sunflower",
    "capacity_two_sets",
    "chebyshev_U",
    "chebyshev_W",
    "classify",
    "clique_number",
    "composition_count_path",
    "composition_count_sunflower",
    "confusable",
    "count_outputs",
    "edge_clique_cover",
    "edge_system",
    "empirical_rate_sweep",
    "entropy",
    "max_clique",
    "pairs_graph",
    "path_profile",
    "reconstruct_view",
    "remove_dominated",
    "restrict_alphabet",
    "separable_split",
    "subgraph_monotonic_check",
    "verify_pairs_equality",
]
