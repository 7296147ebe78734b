"""Determinantal ideals of generic matrices over truncated polynomial rings F[t]/(t^k)."""
from .algebra import QQ, PrimeField, TruncatedSeries, series_det
from .census import ComponentReport, census_2xk, census_general, census_maximal, census_tangent
from .groebner import GBReport, Inconclusive, gb_check, lm_formula
from .ideal_gen import MatrixShape, det_coefficients, generate_ideal, minor_coefficients
from .points import (
    PointAssignment,
    count_points,
    count_points_ringlevel,
    evaluate_membership,
    intersection_witness,
    witness_separation,
)
from .stanley import fvector_full, hilbert_function
from .symb import Monomial, Polynomial, Var, format_polynomial, parse_polynomial

__version__ = "0.1.0"

__all__ = [
    "QQ", "PrimeField", "TruncatedSeries", "series_det",
    "ComponentReport", "census_2xk", "census_general", "census_maximal", "census_tangent",
    "GBReport", "Inconclusive", "gb_check", "lm_formula",
    "MatrixShape", "det_coefficients", "generate_ideal", "minor_coefficients",
    "PointAssignment", "count_points", "count_points_ringlevel", "evaluate_membership",
    "intersection_witness", "witness_separation",
    "fvector_full", "hilbert_function",
    "Monomial", "Polynomial", "Var", "format_polynomial", "parse_polynomial",
]
