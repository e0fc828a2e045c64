"""Exact Weingarten calculus for the orthogonal and unitary groups."""

from .exactmath import PolyQ, RatFuncQ, parse_ratfunc, pseudo_inverse
from .moments import (
    MonomialSpec,
    full_cycle_poly,
    integrate_orth,
    integrate_unit,
    truncated_trace_moment,
)
from .pairings import PairPartition, enumerate_pairings, unitary_pairings
from .partitions import partitions_of
from .weingarten import gram, wg, wg_matrix_oracle, wg_orth, wg_unit
from .zonal import zonal_table

__all__ = [
    "MonomialSpec", "PairPartition", "PolyQ", "RatFuncQ", "enumerate_pairings", "full_cycle_poly",
    "gram", "integrate_orth", "integrate_unit", "parse_ratfunc", "partitions_of", "pseudo_inverse",
    "truncated_trace_moment", "unitary_pairings", "wg", "wg_matrix_oracle", "wg_orth", "wg_unit",
    "zonal_table",
]
