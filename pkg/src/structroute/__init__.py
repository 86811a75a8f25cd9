"""Structural routability analysis for multiple-unicast networks."""

from ._kernels import BACKEND
from .cuts import (CutCheck, DReport, ViableCut, enumerate_viable_i_cuts, in_D_i, is_J_disjoint,
                   is_viable_i_cut, outgoing_view, source_augmented)
from .dominance import IndirectWalk, find_bypassing_ii_walk, is_downstream, sdom, sdom_contains
from .graph import (INF, Network, Path, StructureError, Subgraph, boundary_arcs, bundle,
                    enumerate_i_paths, reachable, structure_violations, validate_structure)
from .netfile import NetworkFileError, emit_network, load_network, parse_network
from .routability import (RoutabilityReport, SearchTooLarge, analyze, analyze_orderings,
                          check_downward_dominance, check_lemma_4_1, check_lemma_4_2,
                          check_lemma_4_3, find_dd_ordering)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CutCheck", "DReport", "INF", "IndirectWalk", "Network", "NetworkFileError",
    "Path", "RoutabilityReport", "SearchTooLarge", "StructureError", "Subgraph", "ViableCut",
    "analyze", "analyze_orderings", "boundary_arcs", "bundle", "check_downward_dominance",
    "check_lemma_4_1", "check_lemma_4_2", "check_lemma_4_3", "emit_network",
    "enumerate_i_paths", "enumerate_viable_i_cuts", "find_bypassing_ii_walk",
    "find_dd_ordering", "in_D_i", "is_J_disjoint", "is_downstream", "is_viable_i_cut",
    "load_network", "outgoing_view", "parse_network", "reachable", "sdom", "sdom_contains",
    "source_augmented", "structure_violations", "validate_structure",
]
