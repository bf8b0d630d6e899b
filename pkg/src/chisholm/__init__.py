"""Diagonal Chisholm approximants of two-variable power series.

The package fits [M/M] rational approximants to truncated bivariate
Taylor series (and diagonal Pade approximants to univariate ones),
evaluates them at real and complex points, and ships generators plus a
CLI reproducing the standard accuracy and acceleration tables.
"""

from .errors import (
    ApproximationError,
    InsufficientTerms,
    NotNormalized,
    ParameterPole,
    PoleHit,
    SingularSystem,
)
from .series import (
    UNKNOWN,
    DoubleSeries,
    SeparableMap,
    UniSeries,
    add_polynomial,
    compose_separable,
    has_chisholm_support,
    homographic_map,
    rotate_pm,
    scale_to_unit_constant,
    slice_y0,
    to_float,
    truncated_reciprocal,
)
from .core import (
    ChisholmApproximant,
    FitReport,
    evaluate,
    evaluate_mapped,
    fit_diagonal,
    reciprocal,
    reduce_to_pade,
    taylor_residuals,
)
from .pade import PadeApproximant
from . import generators, linalg, pade, series, core

__all__ = [
    "ApproximationError", "InsufficientTerms", "NotNormalized",
    "ParameterPole", "PoleHit", "SingularSystem",
    "UNKNOWN", "DoubleSeries", "UniSeries", "SeparableMap",
    "add_polynomial", "compose_separable", "has_chisholm_support",
    "homographic_map", "rotate_pm", "scale_to_unit_constant", "slice_y0",
    "to_float", "truncated_reciprocal",
    "ChisholmApproximant", "FitReport", "evaluate", "evaluate_mapped",
    "fit_diagonal", "reciprocal", "reduce_to_pade", "taylor_residuals",
    "PadeApproximant",
    "generators", "linalg", "pade", "series", "core",
]

__version__ = "0.1.0"
