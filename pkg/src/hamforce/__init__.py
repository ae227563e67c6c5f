"""Forcing sets of Hamiltonian cycles in graphs satisfying Ore's condition.

A vertex set X forces Hamiltonicity when every cycle through all of X
spans the whole graph.  For graphs in which every nonadjacent pair has
degree sum at least n, this package computes the minimum size of such a
set and one witness in O(n^3), checks the degree conditions, extracts a
Hamiltonian cycle constructively, and certifies everything against a
brute-force oracle on small instances.
"""

from .bench import BenchRow, fit_loglog_slope, run_bench
from .classify import (
    PHI1,
    PHI2,
    PHI3,
    SMALL_N_FALLBACK,
    HForceResult,
    classify,
    recognize_two_cliques,
    small_n_fallback,
)
from .closure import ClosureTrace, bc_closure, close, verify_trace, weak_closure
from .families import (
    complete_graph,
    gen_complete_bipartite,
    gen_g21,
    gen_phi1,
    gen_phi3_regular,
    gen_psi,
    gen_random_otg,
)
from .graph import (
    EdgeListParseError,
    Graph,
    InternalInvariantError,
    canonical_cycle,
    complement_components,
    format_edgelist,
    is_hamiltonian_cycle,
    is_valid_cycle,
    parse_edgelist,
)
from .oracle import (
    ORACLE_CAP,
    OracleReport,
    OracleSizeError,
    enumerate_cycles,
    is_hamiltonian_bf,
    is_hforce,
    min_hforce,
)
from .ore import NotAnOtgError, OtgReport, check_dirac, check_otg, hamiltonian_cycle

__version__ = "0.1.0"

__all__ = [
    "BenchRow",
    "ClosureTrace",
    "EdgeListParseError",
    "Graph",
    "HForceResult",
    "InternalInvariantError",
    "NotAnOtgError",
    "ORACLE_CAP",
    "OracleReport",
    "OracleSizeError",
    "OtgReport",
    "PHI1",
    "PHI2",
    "PHI3",
    "SMALL_N_FALLBACK",
    "bc_closure",
    "canonical_cycle",
    "check_dirac",
    "check_otg",
    "classify",
    "close",
    "complement_components",
    "complete_graph",
    "enumerate_cycles",
    "fit_loglog_slope",
    "format_edgelist",
    "gen_complete_bipartite",
    "gen_g21",
    "gen_phi1",
    "gen_phi3_regular",
    "gen_psi",
    "gen_random_otg",
    "hamiltonian_cycle",
    "is_hamiltonian_bf",
    "is_hamiltonian_cycle",
    "is_hforce",
    "is_valid_cycle",
    "min_hforce",
    "parse_edgelist",
    "recognize_two_cliques",
    "run_bench",
    "small_n_fallback",
    "verify_trace",
    "weak_closure",
]
