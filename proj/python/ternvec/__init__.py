"""Bivalent and trivalent Laplacian eigenvectors."""

from ._core import (
    Certificate,
    ContractViolation,
    Graph,
    ParseError,
    Rejected,
    achievable_c,
    add_equal_link,
    brute_force,
    census_row,
    classify_family,
    csp_search,
    cyclomatic_check,
    decompose,
    full_spectrum,
    gen_B1,
    gen_B3,
    gen_counterexample,
    gen_cycle,
    gen_diamond,
    gen_p2_tree,
    gen_regular_bipartite,
    gen_soft_star,
    is_hamiltonian,
    perfect_matching_partition,
    recognize,
    remove_equal_link,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
