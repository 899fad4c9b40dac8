"""
Flight-length, angle and curvature constants of a billiard, and the domain 𝔻 built from them.
"""

__all__ = [
    "ConstantsReport",
    "DomainD",
    "PairConstants",
    "Rectangle",
    "build_domain",
    "compute_constants",
    "restricted_curvature_bounds",
]

from .report import (
    ConstantsReport,
    PairConstants,
    compute_constants,
    restricted_curvature_bounds,
)
from .domain import DomainD, Rectangle, build_domain
