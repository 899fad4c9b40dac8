"""
Brute-force reference computations, slow but simple enough to trust.
"""

from collections.abc import Sequence

import numpy as np

import openbilliard as ob
import openbilliard.typing as obt
from openbilliard.geometry import Billiard, QuadricObstacle


def sampled_projection(
    obstacle: QuadricObstacle, p: obt.Point, samples: int = 10_000, rounds: int = 8
) -> obt.Point:
    """
    The boundary point of a 2D obstacle closest to p, by repeatedly refined sampling.
    """
    if obstacle.dimension != 2:
        raise ob.UnsupportedError("Sampled projection is only implemented in 2D.")

    center, width = np.pi, 2 * np.pi
    for _ in range(rounds):
        angles = center + width * (np.arange(samples) / samples - 0.5)
        points = obstacle.boundary_at(angles)
        best = int(np.argmin(np.linalg.norm(points - p, axis=1)))
        center, width = angles[best], 10 * width / samples
    return obstacle.boundary_at(np.array([center]))[0]


def grid_orbit(
    billiard: Billiard,
    symbols: Sequence[int],
    samples: int = 10_000,
    sweeps: int = 50,
    rounds: int = 6,
) -> obt.RealData:
    """
    Minimizes the cyclic length of a 2D closed polygon by sampling every obstacle boundary.

    Each sweep replaces every point by the best of `samples` boundary samples with the
    neighbours fixed. After `sweeps` sweeps, the sampling window around the current points
    shrinks tenfold, for `rounds` rounds.
    """
    if billiard.dimension != 2:
        raise ob.UnsupportedError("The grid orbit oracle is only implemented in 2D.")

    obstacles = [billiard[index] for index in symbols]
    n = len(obstacles)
    angles = np.full(n, np.pi)
    width = 2 * np.pi
    points = np.array([obstacle.boundary_at(np.array([np.pi]))[0] for obstacle in obstacles])

    for _ in range(rounds):
        for _ in range(sweeps):
            for j, obstacle in enumerate(obstacles):
                candidates = angles[j] + width * (np.arange(samples) / samples - 0.5)
                boundary = obstacle.boundary_at(candidates)
                lengths = np.linalg.norm(boundary - points[j - 1], axis=1) + np.linalg.norm(
                    boundary - points[(j + 1) % n], axis=1
                )
                best = int(np.argmin(lengths))
                angles[j], points[j] = candidates[best], boundary[best]
        width *= 0.1

    return points


def march_ray(
    billiard: Billiard,
    q: obt.Point,
    v: obt.Vector,
    step: float = 1e-3,
    max_length: float = 100.0,
    skip: int | None = None,
) -> tuple[int, float] | None:
    """
    Finds the first obstacle hit by a ray by marching in small steps and bisecting.

    Returns
    -------
    tuple[int, float] | None
        The obstacle index and the hit time, or None if nothing is hit within max_length.
    """
    q = np.asarray(q, dtype=float)
    v = np.asarray(v, dtype=float)
    candidates = [index for index in range(billiard.size) if index != skip]

    def inside(t: float) -> int | None:
        for index in candidates:
            if billiard[index].implicit(q + t * v) < 0:
                return index
        return None

    t = 0.0
    while t < max_length:
        t_next = t + step
        hit = inside(t_next)
        if hit is not None:
            lo, hi = t, t_next
            for _ in range(60):
                mid = (lo + hi) / 2
                if billiard[hit].implicit(q + mid * v) < 0:
                    hi = mid
                else:
                    lo = mid
            return hit, (lo + hi) / 2
        t = t_next
    return None
