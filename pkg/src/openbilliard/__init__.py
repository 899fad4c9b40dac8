"""
A package for estimating the Hausdorff dimension of open billiards.
"""

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "log",
    "BasisMismatchError",
    "ConfigParseError",
    "DegenerateHullError",
    "DegeneratePointError",
    "EclipseViolationError",
    "GrazingCollisionError",
    "InadmissibleSequenceError",
    "InvalidValueError",
    "NoConvergenceError",
    "PointOffBoundaryError",
    "TangentRayError",
    "UnsupportedError",
    "EstimateOptions",
    "Tolerances",
    "cli",
    "config",
    "constants",
    "dimension",
    "dynamics",
    "geometry",
    "orbits",
    "plot",
    "special",
    "testing",
    "typing",
]

# order matters, because function signatures reference the lower layers at import time.
from .exceptions import (
    BasisMismatchError,
    ConfigParseError,
    DegenerateHullError,
    DegeneratePointError,
    EclipseViolationError,
    GrazingCollisionError,
    InadmissibleSequenceError,
    InvalidValueError,
    NoConvergenceError,
    PointOffBoundaryError,
    TangentRayError,
    UnsupportedError,
)
from . import typing
from . import config
from .config import EstimateOptions, Tolerances
from . import geometry
from . import dynamics
from . import orbits
from . import constants
from . import dimension
from . import special
from . import plot
from . import testing

from .logging import log

from . import cli
