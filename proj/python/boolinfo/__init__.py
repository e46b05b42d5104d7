"""Exact mutual information of Boolean functions of BSC-corrupted inputs.

Truth tables are identified with their zero set B = b^{-1}(0); coordinate 1
is the most significant bit of a point, and tables serialize as "n=<n>:<hex>".
"""

from ._core import (
    CapExceeded,
    TruthTable,
    binary_entropy,
    compress,
    cond_entropy,
    edge_boundary,
    enumerate_sn,
    find_triple_counterexample,
    in_compressed_family,
    is_compressed,
    mutual_info,
    mutual_info_single,
    posterior,
    sum_single_mi,
    sweep,
    t_alpha,
    takagi,
    takagi_limit_gap,
    test_inequality,
    two_compress_fixpoint,
    verify_conj1,
    verify_conj2,
    verify_harper,
    verify_sum_inequality,
    verify_triple_counterexample,
)

__all__ = [
    "CapExceeded",
    "TruthTable",
    "binary_entropy",
    "compress",
    "cond_entropy",
    "edge_boundary",
    "enumerate_sn",
    "find_triple_counterexample",
    "in_compressed_family",
    "is_compressed",
    "mutual_info",
    "mutual_info_single",
    "posterior",
    "sum_single_mi",
    "sweep",
    "t_alpha",
    "takagi",
    "takagi_limit_gap",
    "test_inequality",
    "two_compress_fixpoint",
    "verify_conj1",
    "verify_conj2",
    "verify_harper",
    "verify_sum_inequality",
    "verify_triple_counterexample",
]
