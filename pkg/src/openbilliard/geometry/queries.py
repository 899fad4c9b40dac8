import openbilliard as ob
import openbilliard.typing as obt

from .obstacle import BoundaryGeometry, ObstacleBase


def project_to_boundary(
    obstacle: ObstacleBase, p: obt.Point, tolerances: ob.Tolerances | None = None
) -> obt.Point:
    """
    Returns the point of the obstacle boundary closest to p.

    Parameters
    ----------
    obstacle : ObstacleBase
        The obstacle to project onto.
    p : obt.Point
        An arbitrary point inside or outside of the obstacle.
    tolerances : ob.Tolerances | None, default=None
        Uses the projection tolerance.

    Raises
    ------
    ob.DegeneratePointError
        If the closest boundary point is not unique, for example for the center of a ball.
    """
    return obstacle.project(p, tolerances)


def normal_and_curvatures(
    obstacle: ObstacleBase, q: obt.Point, tolerances: ob.Tolerances | None = None
) -> BoundaryGeometry:
    """
    Returns the outward normal, the principal curvatures and principal directions at q.

    Raises
    ------
    ob.PointOffBoundaryError
        If q is farther from the boundary than the boundary tolerance.
    """
    return obstacle.normal_and_curvatures(q, tolerances)
