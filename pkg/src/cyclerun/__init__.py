"""Exact small-graph toolkit for cycle lengths in graphs of given chromatic number.

Graphs are immutable bitset adjacency rows; cycle spectra, chromatic
numbers and critical subgraphs are computed exactly, and certificates of
consecutive cycle lengths are built by explicit constructions and checked
edge by edge.
"""

from .chromatic import (Coloring, chromatic_number, chromatic_number_dp, critical_subgraph,
                        is_colorable, is_critical)
from .constructive import (AdmissibleFamily, BipartitePartition, CaseTrace, Certificate,
                           DichotomyResult, Dispatch, KComplete, KCompleteBlock,
                           ab_paths_from_cycle, admissible_paths,
                           consecutive_cycles_triangle_case, consecutive_cycles_triangle_free,
                           find_certificate, long_cycle_or_complete_bipartite)
from .errors import Budget, BudgetExceeded, Finding, GraphError, PreconditionError
from .graph import Graph, Subgraph
from .harness import RunConfig, VerificationRecord, check_certificate, hunt, verify_stream
from .io import emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, read_graph
from .layers import ConflictWitness, GoodBadSplit, attempt_layer_coloring, good_bad_split
from .spectrum import (RunStats, SpectrumReport, cycle_lengths, cycle_lengths_dp,
                       has_cycle_of_length, longest_cycle, run_stats)
from .structure import BlockDecomposition, blocks

__version__ = "0.1.0"

__all__ = [
    "AdmissibleFamily", "BipartitePartition", "BlockDecomposition", "Budget", "BudgetExceeded",
    "CaseTrace", "Certificate", "Coloring", "ConflictWitness", "DichotomyResult", "Dispatch",
    "Finding", "GoodBadSplit", "Graph", "GraphError", "KComplete", "KCompleteBlock",
    "PreconditionError", "RunConfig", "RunStats", "SpectrumReport", "Subgraph",
    "VerificationRecord", "ab_paths_from_cycle", "admissible_paths", "attempt_layer_coloring",
    "blocks", "check_certificate", "chromatic_number", "chromatic_number_dp",
    "consecutive_cycles_triangle_case", "consecutive_cycles_triangle_free", "critical_subgraph",
    "cycle_lengths", "cycle_lengths_dp", "emit_edge_list", "emit_graph6", "find_certificate",
    "good_bad_split", "has_cycle_of_length", "hunt", "is_colorable", "is_critical",
    "long_cycle_or_complete_bipartite", "longest_cycle", "parse_edge_list", "parse_graph6",
    "read_graph", "run_stats", "verify_stream",
]
