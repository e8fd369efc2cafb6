"""Longest common subsequence constrained to contain a given substring.

Solvers for: given strings A, B and pattern P, find a longest common
subsequence of A and B that includes P as a contiguous substring (length -1
when impossible).  The main path runs in O(|A| * |B|) time but stores only
O((ell + 1) * (n - ell + 1)) frontier cells, ell being the plain LCS length;
a quadratic-table reference and a small brute-force oracle cross-check it.
"""

from .core import (as_symbols, hirschberg_lcs, is_subsequence,
                   lcs_length_linear_space, lcs_table_full)
from .frontier import (INF, UNDEF, FrontierTable, OccurrenceIndex, ScanCursors,
                       build_frontier, build_occurrence_index, next_occurrence,
                       prefix_lcs_query, render_table, suffix_lcs_query,
                       top_defined_row)
from .intervals import Interval, minimal_intervals
from .solver import (NO_SOLUTION, SolveStats, StrIcLcsOutcome, attach_witness,
                     brute_force, deorowicz_reference, solve_with_stats,
                     str_ic_lcs_length, str_ic_lcs_with_witness)

__version__ = "0.1.0"

__all__ = [
    "INF", "UNDEF", "NO_SOLUTION",
    "FrontierTable", "OccurrenceIndex", "ScanCursors", "Interval",
    "StrIcLcsOutcome", "SolveStats",
    "as_symbols", "is_subsequence", "lcs_table_full",
    "lcs_length_linear_space", "hirschberg_lcs",
    "minimal_intervals",
    "build_occurrence_index", "next_occurrence", "build_frontier",
    "top_defined_row", "prefix_lcs_query", "suffix_lcs_query", "render_table",
    "solve_with_stats", "str_ic_lcs_length", "str_ic_lcs_with_witness",
    "attach_witness", "deorowicz_reference", "brute_force",
]
