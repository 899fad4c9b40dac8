import itertools
import logging
import math

import numpy as np

import openbilliard as ob
from openbilliard.geometry import Ball, Billiard, hull_gap

_logger = logging.getLogger(__name__)


def isosceles_three_disks(
    apex_radius: float = 1.0,
    right_radius: float = 2.0,
    left_radius: float = 3.0,
    height: float = 10.0,
    base: float = 8.0,
) -> Billiard:
    """
    Three disks on the corners of an isosceles triangle.

    The apex disk sits at (0, height), the two base disks at (±base/2, 0). With the
    default arguments, this is the standard example billiard with natural dimension
    bounds (0.3265, 1.1669) and adjusted bounds (0.3965, 1.1653).

    Parameters
    ----------
    apex_radius : float, default=1
        Radius of obstacle 0 at the apex.
    right_radius : float, default=2
        Radius of obstacle 1 at (base/2, 0).
    left_radius : float, default=3
        Radius of obstacle 2 at (-base/2, 0).
    height, base : float, default=10, 8
        The triangle dimensions.

    Raises
    ------
    ob.InvalidValueError
        If the disks overlap or a size is not positive.
    """
    if height <= 0 or base <= 0:
        raise ob.InvalidValueError(f"Triangle sizes must be positive, got {height}, {base}.")
    return Billiard(
        [
            Ball([0.0, height], apex_radius),
            Ball([base / 2, 0.0], right_radius),
            Ball([-base / 2, 0.0], left_radius),
        ]
    )


def equilateral_disks(
    count: int = 3, radius: float = 1.0, side: float = 10.0, dimension: int = 2
) -> Billiard:
    """
    Equal balls centered on the corners of a regular polygon.

    Parameters
    ----------
    count : int, default=3
        The number of balls, at least 3.
    radius : float, default=1
        The common radius.
    side : float, default=10
        The distance between neighbouring centers.
    dimension : int, default=2
        Either 2, or 3 for balls whose centers lie in the plane z = 0.
    """
    if count < 3:
        raise ob.InvalidValueError(f"Need at least three balls, got {count}.")
    if dimension not in (2, 3):
        raise ob.InvalidValueError(f"Dimension must be 2 or 3, got {dimension}.")

    circumradius = side / (2 * math.sin(math.pi / count))
    angles = math.pi / 2 + 2 * math.pi * np.arange(count) / count
    centers = circumradius * np.column_stack([np.cos(angles), np.sin(angles)])
    if dimension == 3:
        centers = np.column_stack([centers, np.zeros(count)])

    return Billiard([Ball(center, radius) for center in centers])


def tetrahedral_balls(radius: float = 1.0, edge: float = 10.0) -> Billiard:
    """
    Four equal balls centered on the corners of a regular tetrahedron.

    This is the simplest three-dimensional billiard whose hull H is not flat.
    """
    corners = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=float)
    scale = edge / (2 * math.sqrt(2))
    return Billiard([Ball(scale * corner, radius) for corner in corners])


def random_disk_billiard(
    count: int,
    seed: int,
    box: float = 20.0,
    radii: tuple[float, float] = (0.5, 2.0),
    max_attempts: int = 10_000,
    tolerances: ob.Tolerances | None = None,
) -> Billiard:
    """
    Draws disks with random centers and radii until they satisfy the no-eclipse condition.

    Parameters
    ----------
    count : int
        The number of disks, at least 3.
    seed : int
        The seed of the random number generator.
    box : float, default=20
        Centers are drawn uniformly from [0, box]².
    radii : tuple[float, float], default=(0.5, 2)
        The range of the uniformly drawn radii.
    max_attempts : int, default=10000
        The number of configurations to draw before giving up.
    tolerances : ob.Tolerances | None, default=None
        Tolerances of the no-eclipse check.

    Raises
    ------
    ob.NoConvergenceError
        If no admissible configuration was drawn.
    """
    if count < 3:
        raise ob.InvalidValueError(f"Need at least three disks, got {count}.")
    if not 0 < radii[0] <= radii[1]:
        raise ob.InvalidValueError(f"Invalid radius range {radii}.")

    rng = np.random.default_rng(seed)
    for attempt in range(max_attempts):
        centers = rng.uniform(0, box, size=(count, 2))
        sizes = rng.uniform(*radii, size=count)
        try:
            billiard = Billiard([Ball(c, r) for c, r in zip(centers, sizes)], tolerances)
        except ob.InvalidValueError:
            continue

        if _no_eclipse(billiard, tolerances):
            _logger.debug("random billiard accepted after %d attempts", attempt + 1)
            return billiard

    raise ob.NoConvergenceError(
        f"No admissible billiard of {count} disks found in {max_attempts} attempts."
    )


def _no_eclipse(billiard: Billiard, tolerances: ob.Tolerances | None) -> bool:
    # silent variant of no_eclipse_check that stops at the first failing triple
    for k in range(billiard.size):
        others = [index for index in range(billiard.size) if index != k]
        for i, j in itertools.combinations(others, 2):
            if hull_gap(billiard[k], (billiard[i], billiard[j]), tolerances) <= 0:
                return False
    return True
