"""Certificate-producing constructions for consecutive cycle lengths."""

from .certificate import (CaseTrace, Certificate, KComplete, KCompleteBlock, run_from_cycles,
                          spectrum_certificate)
from .dichotomy import DichotomyResult, complete_bipartite_sides, long_cycle_or_complete_bipartite
from .dispatch import Dispatch, find_certificate, longest_run_certificate
from .paths import (AdmissibleFamily, BipartitePartition, ab_paths_from_cycle, admissible_paths,
                    path_lengths)
from .triangle import consecutive_cycles_triangle_case
from .triangle_free import RELAXED_FLOOR, consecutive_cycles_triangle_free

__all__ = [
    "AdmissibleFamily", "BipartitePartition", "CaseTrace", "Certificate", "DichotomyResult",
    "Dispatch", "KComplete", "KCompleteBlock", "RELAXED_FLOOR", "ab_paths_from_cycle",
    "admissible_paths", "complete_bipartite_sides", "consecutive_cycles_triangle_case",
    "consecutive_cycles_triangle_free", "find_certificate", "long_cycle_or_complete_bipartite",
    "longest_run_certificate", "path_lengths", "run_from_cycles", "spectrum_certificate",
]
