"""
The billiard flow and map, and the evolution of convex fronts along trajectories.
"""

__all__ = [
    "CollisionEvent",
    "FrontOperator",
    "PhasePoint",
    "Trajectory",
    "billiard_map",
    "delta_factor",
    "events_from_points",
    "expansion_rate",
    "first_intersection",
    "flow",
    "initial_front",
    "propagate_front",
    "reflect",
    "reflect_front",
    "simulate",
    "synthetic_trajectory",
    "theta_operator",
    "track_front",
    "transport_front",
]

from .phase import (
    CollisionEvent,
    PhasePoint,
    billiard_map,
    first_intersection,
    flow,
    reflect,
)
from .front import (
    FrontOperator,
    delta_factor,
    expansion_rate,
    initial_front,
    propagate_front,
    reflect_front,
    theta_operator,
    transport_front,
)
from .trajectory import (
    Trajectory,
    events_from_points,
    simulate,
    synthetic_trajectory,
    track_front,
)
