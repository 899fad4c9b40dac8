import itertools
import logging
from dataclasses import dataclass

import numpy as np

import openbilliard as ob
import openbilliard.typing as obt

from ._utils import maximize_over_sphere
from .billiard import Billiard
from .obstacle import Ball, ObstacleBase

_logger = logging.getLogger(__name__)


def separation(
    first: ObstacleBase, second: ObstacleBase, tolerances: ob.Tolerances | None = None
) -> float:
    """
    Returns the distance between two obstacles, or a negative overlap measure.

    For convex bodies A and B, the distance is the maximum over unit directions w of
    -h_A(w) - h_B(-w) with the support functions h. The maximum is negative if the
    bodies intersect, so the sign alone answers the disjointness question.
    """
    if isinstance(first, Ball) and isinstance(second, Ball):
        gap = np.linalg.norm(first.center - second.center)
        return float(gap - first.radius - second.radius)

    tolerances = tolerances or ob.Tolerances()
    value, _ = maximize_over_sphere(
        lambda w: -first.support(w) - second.support(-w),
        first.dimension,
        tolerances.direction_samples,
    )
    return value


def closest_pair(
    first: ObstacleBase, second: ObstacleBase, tolerances: ob.Tolerances | None = None
) -> tuple[obt.Point, obt.Point, float]:
    """
    Finds the mutually closest boundary points of two disjoint obstacles.

    The pair is computed by alternating projection: project the current point of the
    first obstacle onto the second, project back, and repeat until the points stop moving.
    Internally, the obstacles are always processed in a canonical order, so swapping the
    arguments swaps the returned points exactly.

    Parameters
    ----------
    first, second : ObstacleBase
        Two disjoint obstacles.
    tolerances : ob.Tolerances | None, default=None
        Uses the closest-pair tolerance on the point movement and the iteration budget.

    Returns
    -------
    tuple[obt.Point, obt.Point, float]
        The point p_ij on the first obstacle, the point p_ji on the second,
        and their distance.

    Raises
    ------
    ob.NoConvergenceError
        If the iteration budget is exhausted.
    ob.InvalidValueError
        If both arguments describe the same obstacle.
    """
    tolerances = tolerances or ob.Tolerances()

    first_key, second_key = first.sort_key(), second.sort_key()
    if first_key == second_key:
        raise ob.InvalidValueError(
            "Cannot compute the closest pair of an obstacle with itself."
        )
    if second_key < first_key:
        p_ji, p_ij, distance = closest_pair(second, first, tolerances)
        return p_ij, p_ji, distance

    p = first.project(second.center, tolerances)
    for iteration in range(tolerances.closest_pair_iterations):
        q = second.project(p, tolerances)
        p_next = first.project(q, tolerances)

        movement = np.linalg.norm(p_next - p)
        p = p_next
        if movement < tolerances.closest_pair:
            q = second.project(p, tolerances)
            _logger.debug("closest pair converged after %d iterations", iteration + 1)
            return p, q, float(np.linalg.norm(p - q))

    raise ob.NoConvergenceError(
        f"Alternating projection did not converge in {tolerances.closest_pair_iterations} "
        "iterations."
    )


def hull_gap(
    obstacle: ObstacleBase,
    hull_of: tuple[ObstacleBase, ObstacleBase],
    tolerances: ob.Tolerances | None = None,
) -> float:
    """
    Signed distance between an obstacle and the convex hull of two others.

    Positive values are distances, non-positive values mean that the obstacle touches
    or intersects the hull. Uses the support function of the hull, which is the maximum
    of the two support functions.
    """
    tolerances = tolerances or ob.Tolerances()
    first, second = hull_of

    if all(isinstance(k, Ball) for k in (obstacle, first, second)):
        return _stadium_gap(obstacle, first, second)

    value, _ = maximize_over_sphere(
        lambda w: -obstacle.support(-w) - np.maximum(first.support(w), second.support(w)),
        obstacle.dimension,
        tolerances.direction_samples,
    )
    return value


def _stadium_gap(obstacle: Ball, first: Ball, second: Ball) -> float:
    # The hull of two balls is the union of the balls swept along the segment
    # between the centers with linearly interpolated radius; the distance to it is
    # the minimum over the segment of |x - c(s)| - r(s) - r_K, a convex function of s.
    offset = second.center - first.center
    length_sq = offset @ offset
    radius_slope = second.radius - first.radius

    def gap(s: float) -> float:
        point = first.center + s * offset
        return (
            np.linalg.norm(obstacle.center - point)
            - (first.radius + s * radius_slope)
            - obstacle.radius
        )

    # candidates: both ends and the stationary point of the convex function
    candidates = [0.0, 1.0]
    if length_sq > 0:
        t0 = (obstacle.center - first.center) @ offset / length_sq
        distance_to_line = np.linalg.norm(obstacle.center - first.center - t0 * offset)
        length = np.sqrt(length_sq)
        if abs(radius_slope) < length:
            shift = radius_slope * distance_to_line / np.sqrt(length_sq - radius_slope**2)
            candidates.append(float(np.clip(t0 + shift / length, 0.0, 1.0)))

    return float(min(gap(s) for s in candidates))


def distance_obstacle_to_hull(
    obstacle: ObstacleBase,
    hull_of: tuple[ObstacleBase, ObstacleBase],
    tolerances: ob.Tolerances | None = None,
) -> float:
    """
    Returns the distance between an obstacle and the convex hull of two other obstacles.

    Parameters
    ----------
    obstacle : ObstacleBase
        The obstacle K.
    hull_of : tuple[ObstacleBase, ObstacleBase]
        The two obstacles K_i, K_j whose joint convex hull is used.
    tolerances : ob.Tolerances | None, default=None
        Uses the number of sampled directions.

    Raises
    ------
    ob.EclipseViolationError
        If the distance is not positive, that is, K meets the hull.
    """
    gap = hull_gap(obstacle, hull_of, tolerances)
    if gap <= 0:
        raise ob.EclipseViolationError(
            f"Obstacle intersects the convex hull of two others (margin {gap:.6g})."
        )
    return gap


def max_boundary_distance(
    first: ObstacleBase, second: ObstacleBase, tolerances: ob.Tolerances | None = None
) -> float:
    """
    Returns the largest distance between points of the first and of the second obstacle.

    This is the maximum over unit directions w of h_first(w) + h_second(-w).
    """
    tolerances = tolerances or ob.Tolerances()
    if isinstance(first, Ball) and isinstance(second, Ball):
        gap = np.linalg.norm(first.center - second.center)
        return float(gap + first.radius + second.radius)

    value, _ = maximize_over_sphere(
        lambda w: first.support(w) + second.support(-w),
        first.dimension,
        tolerances.direction_samples,
    )
    return value


@dataclass(frozen=True)
class EclipseCheck:
    """
    Result of the no-eclipse test for one obstacle against the hull of two others.

    Attributes
    ----------
    obstacle : int
        Index k of the tested obstacle.
    hull_of : tuple[int, int]
        Indices i < j of the two obstacles spanning the hull.
    margin : float
        The distance between K_k and Cvx(K_i ∪ K_j); non-positive on failure.
    """

    obstacle: int
    hull_of: tuple[int, int]
    margin: float

    @property
    def passed(self) -> bool:
        return self.margin > 0


@dataclass(frozen=True)
class EclipseReport:
    """
    The outcome of :py:func:`no_eclipse_check` for all triples of a billiard.

    Attributes
    ----------
    checks : tuple[EclipseCheck, ...]
        One entry per obstacle and unordered pair of other obstacles, in lexicographic order.
    """

    checks: tuple[EclipseCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> tuple[EclipseCheck, ...]:
        return tuple(check for check in self.checks if not check.passed)

    @property
    def min_margin(self) -> float:
        return min(check.margin for check in self.checks)

    def margin(self, obstacle: int, hull_of: tuple[int, int]) -> float:
        """
        Returns the margin of one triple; the pair may be given in any order.
        """
        key = tuple(sorted(hull_of))
        for check in self.checks:
            if check.obstacle == obstacle and check.hull_of == key:
                return check.margin
        raise ob.InvalidValueError(f"No check for obstacle {obstacle} against hull {hull_of}.")


def no_eclipse_check(
    billiard: Billiard, tolerances: ob.Tolerances | None = None
) -> EclipseReport:
    """
    Checks the no-eclipse condition for all triples of distinct obstacles.

    For each obstacle K_k and each pair of other obstacles K_i, K_j, the distance between
    K_k and the convex hull of K_i ∪ K_j must be positive. Failures are reported, not raised.
    """
    checks = []
    for k in range(billiard.size):
        others = [index for index in range(billiard.size) if index != k]
        for i, j in itertools.combinations(others, 2):
            margin = hull_gap(billiard[k], (billiard[i], billiard[j]), tolerances)
            checks.append(EclipseCheck(k, (i, j), margin))

    report = EclipseReport(tuple(checks))
    for failure in report.failures:
        _logger.warning(
            "obstacle %d meets the hull of %s, margin %.3g",
            failure.obstacle,
            failure.hull_of,
            failure.margin,
        )
    return report
