"""
Obstacles, billiard tables, convex hulls and distance computations.

Every other subpackage consumes these. All objects are immutable after construction,
so the functions here are safe to call from concurrent workers.
"""

__all__ = [
    "Ball",
    "Billiard",
    "BoundaryGeometry",
    "ConvexPolytope",
    "EclipseCheck",
    "EclipseReport",
    "Ellipse",
    "Ellipsoid",
    "ObstacleBase",
    "QuadricObstacle",
    "closest_pair",
    "convex_hull",
    "distance_obstacle_to_hull",
    "hull_gap",
    "max_boundary_distance",
    "no_eclipse_check",
    "normal_and_curvatures",
    "project_to_boundary",
    "separation",
]

from .obstacle import (
    Ball,
    BoundaryGeometry,
    Ellipse,
    Ellipsoid,
    ObstacleBase,
    QuadricObstacle,
)
from .billiard import Billiard
from .polytope import ConvexPolytope, convex_hull
from .distances import (
    EclipseCheck,
    EclipseReport,
    closest_pair,
    distance_obstacle_to_hull,
    hull_gap,
    max_boundary_distance,
    no_eclipse_check,
    separation,
)
from .queries import normal_and_curvatures, project_to_boundary
