"""Exact generation of numbers that are both k-gonal and centered k-gonal."""

from .exactmath import InvariantError, LucasPair, QuadInt, is_perfect_square, isqrt, lucas_pair, quad_mul, quad_pow
from .figurate import PolygonParams, centered, invert_centered, invert_polygonal, polygonal
from .intersect import (
    IntersectionRecord,
    case2_sequence,
    index_m,
    index_n,
    radical_a,
    record,
    stream,
    value_at,
)
from .oracle import OracleReport, compare, enumerate_common
from .pell import CFExpansion, PellSolution, cf_expand, eq2_check, norm_two_solutions, pell_fundamental, pell_solutions

__version__ = "0.1.0"
