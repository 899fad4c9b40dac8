"""
Symbolic coding, periodic orbits and the convex hull of closest-pair points.

Periodic orbits are found as critical points of the cyclic length functional; the
period-2 orbits are the closest pairs of obstacles.
"""

__all__ = [
    "ClosestPair",
    "ClosestPairs",
    "HullConjectureReport",
    "PeriodicOrbit",
    "SymbolSequence",
    "all_closest_pairs",
    "enumerate_periodic_sequences",
    "find_periodic_orbit",
    "hull_H",
    "orbit_length",
    "orbit_trajectory",
    "random_periodic_sequences",
    "reflection_residual",
    "test_hull_conjecture",
]

from .symbols import SymbolSequence, enumerate_periodic_sequences, random_periodic_sequences
from .periodic import (
    ClosestPair,
    ClosestPairs,
    PeriodicOrbit,
    all_closest_pairs,
    find_periodic_orbit,
    orbit_length,
    orbit_trajectory,
    reflection_residual,
)
from .hull import HullConjectureReport, hull_H, test_hull_conjecture
