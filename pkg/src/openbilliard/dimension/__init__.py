"""
Fixed points of the curvature recursion and the resulting Hausdorff dimension bounds.

The typical entry point is :py:func:`estimate_dimension`, which chains everything from
the billiard geometry to the bounds. The individual steps are exposed for inspection.
"""

__all__ = [
    "ConstantChain",
    "DimensionBounds",
    "DimensionReport",
    "GExtrema",
    "code_trajectory",
    "constant_chain",
    "curvature_map",
    "dimension_bounds",
    "dimension_bounds_eq1",
    "dimension_bounds_eq2",
    "dimension_bounds_eq7",
    "estimate_dimension",
    "fixed_point_residual",
    "g",
    "g_extrema",
    "holder_alpha",
    "holder_exponent",
    "iterate_curvature_map",
    "pinching_check",
    "symbol_distance",
    "symbol_space_dim",
]

from .fixed_point import (
    GExtrema,
    curvature_map,
    fixed_point_residual,
    g,
    g_extrema,
    iterate_curvature_map,
)
from .bounds import (
    ConstantChain,
    DimensionBounds,
    constant_chain,
    dimension_bounds,
    dimension_bounds_eq1,
    dimension_bounds_eq2,
    dimension_bounds_eq7,
    holder_alpha,
    holder_exponent,
    pinching_check,
)
from .symbolic import code_trajectory, symbol_distance, symbol_space_dim
from .estimate import DimensionReport, estimate_dimension
