"""Parameterized dominating-set solvers with compression and lifting."""

from ._domsetkit import (
    Approx2Certificate,
    Compression,
    FesModulator,
    Graph,
    HalvesCertificate,
    InputError,
    OracleResult,
    ResourceError,
    SolveResult,
    TradeoffResult,
    TreeDecomposition,
    ValidationError,
    approx2_tw,
    approx2_twd,
    approx_tradeoff,
    brute_min_dominating,
    compress,
    decompose,
    feedback_edge_number,
    fes_modulator,
    find_modulator,
    gen_cactus,
    gen_from_hitting_set,
    gen_from_set_cover,
    gen_random,
    gen_weights,
    greedy_dominating,
    is_cactus,
    is_dominating,
    read_instance,
    solve_exact_fes,
    solve_exact_tw,
    solve_exact_vc,
    solve_half_width,
    verify_decomposition,
    write_instance,
)

__version__ = "0.1.0"

__all__ = [
    "Approx2Certificate",
    "Compression",
    "FesModulator",
    "Graph",
    "HalvesCertificate",
    "InputError",
    "OracleResult",
    "ResourceError",
    "SolveResult",
    "TradeoffResult",
    "TreeDecomposition",
    "ValidationError",
    "approx2_tw",
    "approx2_twd",
    "approx_tradeoff",
    "brute_min_dominating",
    "compress",
    "decompose",
    "feedback_edge_number",
    "fes_modulator",
    "find_modulator",
    "gen_cactus",
    "gen_from_hitting_set",
    "gen_from_set_cover",
    "gen_random",
    "gen_weights",
    "greedy_dominating",
    "is_cactus",
    "is_dominating",
    "read_instance",
    "solve_exact_fes",
    "solve_exact_tw",
    "solve_exact_vc",
    "solve_half_width",
    "verify_decomposition",
    "write_instance",
]
