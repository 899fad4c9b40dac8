import logging
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
import scipy.optimize

import openbilliard as ob
import openbilliard.typing as obt
from openbilliard.geometry import (
    Billiard,
    ConvexPolytope,
    EclipseReport,
    ObstacleBase,
    max_boundary_distance,
    no_eclipse_check,
)
from openbilliard.orbits import ClosestPairs, all_closest_pairs, hull_H

_logger = logging.getLogger(__name__)

Mode = Literal["natural", "adjusted"]


@dataclass(frozen=True)
class PairConstants:
    """
    The constants of one ordered obstacle pair (i, j), for flights from K_i to K_j.

    Attributes
    ----------
    i, j : int
        The obstacle indices.
    d_minus, d_plus : float
        Lower and upper bounds d⁻_ij, d⁺_ij on the flight length.
    b_minus : float
        The smallest distance b⁻_ij of K_i to the hull of K_j and another obstacle.
    cos_phi_bound : float
        A lower bound on the cosine of the collision angle, in (0, 1].
    kappa_minus_i, kappa_plus_i : float
        Curvature bounds of K_i, over the whole boundary or over the part inside H.
    """

    i: int
    j: int
    d_minus: float
    d_plus: float
    b_minus: float
    cos_phi_bound: float
    kappa_minus_i: float
    kappa_plus_i: float

    def __post_init__(self) -> None:
        if not 0 < self.d_minus <= self.d_plus:
            raise ob.InvalidValueError(
                f"Pair ({self.i}, {self.j}) needs 0 < d⁻ <= d⁺, "
                f"got {self.d_minus}, {self.d_plus}."
            )
        if not 0 < self.kappa_minus_i <= self.kappa_plus_i:
            raise ob.InvalidValueError(
                f"Pair ({self.i}, {self.j}) needs 0 < κ⁻ <= κ⁺, "
                f"got {self.kappa_minus_i}, {self.kappa_plus_i}."
            )
        if not 0 < self.cos_phi_bound <= 1:
            raise ob.InvalidValueError(
                f"Pair ({self.i}, {self.j}) has invalid angle bound {self.cos_phi_bound}."
            )

    @property
    def phi_bound(self) -> float:
        """The upper bound on the collision angle."""
        return math.acos(self.cos_phi_bound)


@dataclass(frozen=True)
class ConstantsReport:
    """
    All scalar constants of a billiard, in natural or adjusted mode.

    Attributes
    ----------
    mode : {"natural", "adjusted"}
        Whether the constants refer to whole boundaries or to the parts inside H.
    pairs : tuple[PairConstants, ...]
        One entry per ordered pair (i, j), i != j, in lexicographic order.
    curvatures : tuple[tuple[float, float], ...]
        The bounds (κ⁻_i, κ⁺_i) per obstacle.
    d_min, d_max : float
        The global flight-length bounds.
    b_minus : float
        The global no-eclipse margin b⁻.
    cos_phi_plus : float
        The global angle bound min(1, b⁻ / d_max).
    kappa_minus, kappa_plus : float
        The global curvature bounds.
    hull : ConvexPolytope | None
        The hull H of the closest-pair points; None if it is degenerate in natural mode.
    closest_pairs : ClosestPairs
        The closest pairs the constants were computed from.
    eclipse : EclipseReport
        The no-eclipse check.
    options : ob.EstimateOptions
        The switches used.
    """

    mode: Mode
    pairs: tuple[PairConstants, ...]
    curvatures: tuple[tuple[float, float], ...]
    d_min: float
    d_max: float
    b_minus: float
    cos_phi_plus: float
    kappa_minus: float
    kappa_plus: float
    hull: ConvexPolytope | None
    closest_pairs: ClosestPairs
    eclipse: EclipseReport
    options: ob.EstimateOptions

    @property
    def phi_plus(self) -> float:
        """The global upper bound φ⁺ on collision angles."""
        return math.acos(self.cos_phi_plus)

    def pair(self, i: int, j: int) -> PairConstants:
        for constants in self.pairs:
            if constants.i == i and constants.j == j:
                return constants
        raise ob.InvalidValueError(f"No constants for the pair ({i}, {j}).")

    def as_dict(self) -> dict:
        return {
            "mode": self.mode,
            "d_min": self.d_min,
            "d_max": self.d_max,
            "b_minus": self.b_minus,
            "cos_phi_plus": self.cos_phi_plus,
            "phi_plus": self.phi_plus,
            "kappa_minus": self.kappa_minus,
            "kappa_plus": self.kappa_plus,
            "curvatures": [list(bounds) for bounds in self.curvatures],
            "pairs": [
                {
                    "i": p.i,
                    "j": p.j,
                    "d_minus": p.d_minus,
                    "d_plus": p.d_plus,
                    "b_minus": p.b_minus,
                    "cos_phi_bound": p.cos_phi_bound,
                    "kappa_minus_i": p.kappa_minus_i,
                    "kappa_plus_i": p.kappa_plus_i,
                }
                for p in self.pairs
            ],
        }


def compute_constants(
    billiard: Billiard,
    mode: Mode = "natural",
    tolerances: ob.Tolerances | None = None,
    options: ob.EstimateOptions | None = None,
) -> ConstantsReport:
    """
    Computes the flight-length, angle and curvature constants of a billiard.

    Natural mode bounds the curvatures over whole boundaries and takes d⁺_ij according
    to ``options.natural_d_plus``. Adjusted mode restricts everything to the hull H of the
    closest-pair points: d⁺_ij is the largest distance |p_ik - p_jl| with k != i, l != j,
    and the curvature bounds are extrema over the boundary parts inside H.

    In both modes d⁻_ij is the distance of K_i and K_j, b⁻_ij the smallest distance of K_i
    to the hull of K_j and any third obstacle, and the angle bound is
    cos φ⁺_ij = min(1, b⁻_ij / L) with L = d⁺_ij or L = d_max.

    Parameters
    ----------
    billiard : Billiard
        The billiard table.
    mode : {"natural", "adjusted"}, default="natural"
        Which set the constants are taken over.
    tolerances : ob.Tolerances | None, default=None
        Solver tolerances and sample counts.
    options : ob.EstimateOptions | None, default=None
        The modelling switches.

    Raises
    ------
    ob.EclipseViolationError
        If the no-eclipse condition fails.
    ob.DegenerateHullError
        In adjusted mode, if H is at most one-dimensional.
    ob.InvalidValueError
        If the mode is unknown.
    """
    if mode not in ("natural", "adjusted"):
        raise ob.InvalidValueError(f"Mode must be 'natural' or 'adjusted', got '{mode}'.")
    tolerances = tolerances or ob.Tolerances()
    options = options or ob.EstimateOptions()

    eclipse = no_eclipse_check(billiard, tolerances)
    if not eclipse.passed:
        failure = eclipse.failures[0]
        raise ob.EclipseViolationError(
            f"Obstacle {failure.obstacle} meets the hull of obstacles {failure.hull_of}, "
            f"margin {failure.margin:.3g}."
        )

    closest = all_closest_pairs(billiard, tolerances)
    hull = _hull(billiard, closest, mode, tolerances)

    if mode == "natural":
        curvatures = tuple(obstacle.curvature_bounds() for obstacle in billiard)
    else:
        curvatures = tuple(
            restricted_curvature_bounds(obstacle, hull, closest.all_points(), tolerances)
            for obstacle in billiard
        )

    d_minus, d_plus, b_minus = {}, {}, {}
    for i, j in billiard.ordered_pairs():
        d_minus[(i, j)] = closest[(i, j)].distance
        if mode == "natural" and options.natural_d_plus == "boundary":
            d_plus[(i, j)] = max_boundary_distance(billiard[i], billiard[j], tolerances)
        else:
            d_plus[(i, j)] = _hull_d_plus(closest, billiard.size, i, j)
        b_minus[(i, j)] = min(
            eclipse.margin(i, (j, k)) for k in range(billiard.size) if k not in (i, j)
        )

    d_min, d_max = min(d_minus.values()), max(d_plus.values())
    pairs = []
    for (i, j), distance in d_minus.items():
        length = d_plus[(i, j)] if options.angle_length == "pair" else d_max
        pairs.append(
            PairConstants(
                i,
                j,
                distance,
                d_plus[(i, j)],
                b_minus[(i, j)],
                min(1.0, b_minus[(i, j)] / length),
                *curvatures[i],
            )
        )

    b_global = min(b_minus.values())
    report = ConstantsReport(
        mode=mode,
        pairs=tuple(pairs),
        curvatures=curvatures,
        d_min=d_min,
        d_max=d_max,
        b_minus=b_global,
        cos_phi_plus=min(1.0, b_global / d_max),
        kappa_minus=min(bounds[0] for bounds in curvatures),
        kappa_plus=max(bounds[1] for bounds in curvatures),
        hull=hull,
        closest_pairs=closest,
        eclipse=eclipse,
        options=options,
    )
    _logger.debug(
        "%s constants: d_min %.6g, d_max %.6g, b⁻ %.6g, κ in [%.6g, %.6g]",
        mode,
        report.d_min,
        report.d_max,
        report.b_minus,
        report.kappa_minus,
        report.kappa_plus,
    )
    return report


def _hull(
    billiard: Billiard, closest: ClosestPairs, mode: Mode, tolerances: ob.Tolerances
) -> ConvexPolytope | None:
    if mode == "adjusted":
        return hull_H(billiard, closest, tolerances)
    try:
        return hull_H(billiard, closest, tolerances)
    except ob.DegenerateHullError as error:
        _logger.warning("natural mode continues without hull: %s", error)
        return None


def _hull_d_plus(closest: ClosestPairs, size: int, i: int, j: int) -> float:
    starts = [closest.point(i, k) for k in range(size) if k != i]
    ends = [closest.point(j, l) for l in range(size) if l != j]
    return max(float(np.linalg.norm(p - q)) for p in starts for q in ends)


def restricted_curvature_bounds(
    obstacle: ObstacleBase,
    hull: ConvexPolytope,
    extra_points: obt.RealData | None = None,
    tolerances: ob.Tolerances | None = None,
) -> tuple[float, float]:
    """
    Bounds the principal curvatures of an obstacle over its boundary part inside a hull.

    The boundary is sampled densely; the samples inside the hull, and those of the extra
    points lying on the obstacle, give first extrema, which are then refined locally.
    For a flat hull in 3D, the boundary is sampled on the plane section instead.

    Parameters
    ----------
    obstacle : ObstacleBase
        The obstacle.
    hull : ConvexPolytope
        The hull H.
    extra_points : obt.RealData | None, default=None
        Further candidate points, typically the closest-pair points p_ij. Those not on the
        obstacle boundary are ignored.
    tolerances : ob.Tolerances | None, default=None
        Uses the sample counts and the hull and boundary tolerances.

    Returns
    -------
    tuple[float, float]
        The smallest and the largest principal curvature found.

    Raises
    ------
    ob.DegenerateHullError
        If no boundary point of the obstacle lies inside the hull.
    """
    tolerances = tolerances or ob.Tolerances()
    dimension = obstacle.dimension
    count = (
        tolerances.boundary_samples_2d if dimension == 2 else tolerances.boundary_samples_3d
    )

    if hull.is_degenerate and dimension == 3:
        samples = obstacle.section_samples(hull.origin, hull.basis, count)
    else:
        samples = obstacle.boundary_samples(count)

    if extra_points is not None and len(extra_points):
        extra = np.asarray(extra_points, dtype=float)
        on_boundary = np.abs(np.asarray(obstacle.implicit(extra))) <= tolerances.boundary
        samples = np.vstack([samples, extra[on_boundary]])

    inside = samples[np.asarray(hull.signed_distance(samples)) <= tolerances.hull]
    if len(inside) == 0:
        raise ob.DegenerateHullError("The hull H contains no boundary point of the obstacle.")

    curvatures = obstacle.principal_curvatures(inside)
    lowest = np.min(curvatures, axis=1)
    highest = np.max(curvatures, axis=1)
    kappa_minus = float(lowest.min())
    kappa_plus = float(highest.max())

    if not hull.is_degenerate:
        kappa_minus = min(
            kappa_minus,
            _refine(obstacle, hull, inside[np.argmin(lowest)], lambda k: k.min(), tolerances),
        )
        kappa_plus = max(
            kappa_plus,
            -_refine(
                obstacle, hull, inside[np.argmax(highest)], lambda k: -k.max(), tolerances
            ),
        )

    return kappa_minus, kappa_plus


def _refine(obstacle, hull, start, objective, tolerances) -> float:
    # minimizes objective(curvatures) over boundary points inside the hull
    best = float(objective(obstacle.principal_curvatures(start[np.newaxis])[0]))

    def penalized(x: obt.RealData) -> float:
        try:
            q = obstacle.project(x, tolerances)
        except ob.DegeneratePointError:
            return best + 1.0
        if hull.signed_distance(q) > tolerances.hull:
            return best + 1.0
        return float(objective(obstacle.principal_curvatures(q[np.newaxis])[0]))

    size = 1e-2 / max(obstacle.curvature_bounds()[1], 1e-12)
    simplex = np.vstack([start, start + size * np.eye(len(start))])
    result = scipy.optimize.minimize(
        penalized,
        start,
        method="Nelder-Mead",
        options={"initial_simplex": simplex, "xatol": 1e-12, "fatol": 1e-14},
    )
    return min(best, float(result.fun))
