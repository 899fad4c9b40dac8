"""
Utility functions for writing openbilliard tests: assertions, brute-force oracles
and random inputs.
"""

__all__ = [
    "assert_points_close",
    "grid_orbit",
    "march_ray",
    "random_front",
    "random_phase_point",
    "sampled_projection",
]

from .assertions import assert_points_close
from .oracles import grid_orbit, march_ray, sampled_projection
from .random import random_front, random_phase_point
