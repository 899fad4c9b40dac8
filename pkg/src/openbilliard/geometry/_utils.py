import math
from collections.abc import Callable

import numpy as np
import scipy.linalg
import scipy.optimize

import openbilliard as ob
import openbilliard.typing as obt


def clone_readonly(data: obt.RealData) -> obt.RealData:
    clone = np.array(data, dtype=float)
    clone.setflags(write=False)
    return clone


def normalize(v: obt.Vector) -> obt.Vector:
    norm = np.linalg.norm(v)
    if norm == 0:
        raise ob.InvalidValueError("Cannot normalize a zero vector.")
    return v / norm


def fibonacci_sphere(n: int) -> obt.RealData:
    """
    Returns n roughly uniformly spread unit vectors in 3D as an array of shape (n, 3).
    """
    k = np.arange(n) + 0.5
    z = 1 - 2 * k / n
    r = np.sqrt(np.maximum(0.0, 1 - z**2))
    phi = math.pi * (3 - math.sqrt(5)) * k
    return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])


def circle_directions(n: int) -> obt.RealData:
    angles = 2 * math.pi * np.arange(n) / n
    return np.column_stack([np.cos(angles), np.sin(angles)])


def unit_directions(dimension: int, n: int) -> obt.RealData:
    if dimension == 2:
        return circle_directions(n)
    return fibonacci_sphere(n)


def maximize_over_sphere(
    func: Callable[[obt.Vector], float], dimension: int, samples: int
) -> tuple[float, obt.Vector]:
    """
    Maximizes a function of a unit direction.

    The sphere is sampled first, then the best sample is refined locally: by a bounded
    scalar search over the angle in 2D, and by Nelder-Mead in the tangent plane of the
    best sample in 3D. The function may have kinks, so no gradients are used.
    It must accept an array of directions of shape (N, D) as well as a single direction.

    Returns
    -------
    tuple[float, obt.Vector]
        The maximum value and the maximizing unit direction.
    """
    directions = unit_directions(dimension, samples)
    values = np.asarray(func(directions), dtype=float)
    best = int(np.argmax(values))

    if dimension == 2:
        center = 2 * math.pi * best / samples
        width = 2 * math.pi / samples

        def negative(angle: float) -> float:
            return -float(func(np.array([math.cos(angle), math.sin(angle)])))

        result = scipy.optimize.minimize_scalar(
            negative,
            bounds=(center - width, center + width),
            method="bounded",
            options={"xatol": 1e-13},
        )
        angle = float(result.x)
        candidate = np.array([math.cos(angle), math.sin(angle)])
    else:
        w0 = directions[best]
        e1, e2 = tangent_basis(w0)

        def candidate_for(s: obt.RealData) -> obt.Vector:
            return normalize(w0 + s[0] * e1 + s[1] * e2)

        result = scipy.optimize.minimize(
            lambda s: -float(func(candidate_for(s))),
            np.zeros(2),
            method="Nelder-Mead",
            options={
                "xatol": 1e-11,
                "fatol": 1e-15,
                "initial_simplex": np.array([[0, 0], [0.05, 0], [0, 0.05]]),
                "maxiter": 4000,
            },
        )
        candidate = candidate_for(result.x)

    value = float(func(candidate))
    if value >= values[best]:
        return value, candidate
    return float(values[best]), directions[best]


def tangent_basis(n: obt.Vector) -> obt.RealData:
    """
    Returns an orthonormal basis of the plane orthogonal to the unit vector n.

    The result has shape (D-1, D), one basis vector per row.
    """
    return scipy.linalg.null_space(np.atleast_2d(n)).T
