import logging
from collections.abc import Iterator, Mapping
from dataclasses import dataclass

import numpy as np

import openbilliard as ob
import openbilliard.typing as obt
from openbilliard.dynamics import (
    FrontOperator,
    Trajectory,
    events_from_points,
    initial_front,
    reflect,
    synthetic_trajectory,
)
from openbilliard.geometry import Billiard, closest_pair
from openbilliard.geometry._utils import clone_readonly, normalize

from .symbols import SymbolSequence

_logger = logging.getLogger(__name__)

_MAX_HALVINGS = 60


@dataclass(frozen=True)
class PeriodicOrbit:
    """
    A periodic billiard trajectory found by minimizing the total length.

    Attributes
    ----------
    sequence : SymbolSequence
        The periodic word of struck obstacles.
    points : obt.RealData
        The reflection points, shape (n, D); points[j] lies on obstacle sequence.symbols[j].
    length : float
        The cyclic length F of the closed polygon.
    residual : float
        The larger of the worst boundary residual and the worst violation of the
        reflection law, measured as |u_out - reflect(u_in, n)|.
    sweeps : int
        The number of minimizer sweeps used.
    """

    sequence: SymbolSequence
    points: obt.RealData
    length: float
    residual: float
    sweeps: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", clone_readonly(self.points))

    @property
    def period(self) -> int:
        return len(self.sequence)

    @property
    def flights(self) -> obt.RealData:
        """The segment lengths |q_{j+1} - q_j|."""
        return np.linalg.norm(np.roll(self.points, -1, axis=0) - self.points, axis=1)


def orbit_length(points: obt.RealData) -> float:
    """
    The cyclic length F(q_1, ..., q_n) = Σ |q_j - q_{j+1}| with q_{n+1} = q_1.
    """
    points = np.asarray(points, dtype=float)
    return float(np.sum(np.linalg.norm(np.roll(points, -1, axis=0) - points, axis=1)))


def reflection_residual(
    billiard: Billiard, sequence: SymbolSequence, points: obt.RealData
) -> float:
    """
    Measures how far a closed polygon is from being a billiard trajectory.

    Returns the maximum over all vertices of the boundary residual and of the mismatch
    between the outgoing direction and the mirrored incoming direction.
    """
    n = len(points)
    worst = 0.0
    for j, index in enumerate(sequence.symbols):
        obstacle = billiard[index]
        q = points[j]
        worst = max(worst, abs(float(obstacle.implicit(q))))

        u_in = normalize(q - points[j - 1])
        u_out = normalize(points[(j + 1) % n] - q)
        normal = obstacle.normal(obstacle.snap(q))
        worst = max(worst, float(np.linalg.norm(u_out - reflect(u_in, normal))))
    return worst


def _initial_points(billiard: Billiard, sequence: SymbolSequence, tolerances) -> obt.RealData:
    centers = np.array([obstacle.center for obstacle in billiard])
    points = []
    for index in sequence.symbols:
        others = np.delete(centers, index, axis=0)
        points.append(billiard[index].project(others.mean(axis=0), tolerances))
    return np.array(points)


def find_periodic_orbit(
    billiard: Billiard,
    sequence: SymbolSequence,
    tolerances: ob.Tolerances | None = None,
    max_sweeps: int | None = None,
) -> PeriodicOrbit:
    """
    Finds the periodic orbit with a given itinerary by minimizing its length.

    The length F of the closed polygon through one point per obstacle of the sequence is
    minimized by cyclic coordinate descent: each sweep moves every point once by a projected
    gradient step along its boundary, with step length 1/L for the local Lipschitz bound
    L = 1/|q - a| + 1/|q - b| + 2κ_max and backtracking if F does not decrease. The
    critical points of F are exactly the periodic billiard trajectories.

    Each point starts at the boundary point of its obstacle closest to the centroid of the
    other obstacles' centers.

    Parameters
    ----------
    billiard : Billiard
        The billiard table.
    sequence : SymbolSequence
        A periodic admissible sequence of length at least two.
    tolerances : ob.Tolerances | None, default=None
        Uses the orbit tolerance on the point movement per sweep and the sweep budget.
    max_sweeps : int | None, default=None
        Overrides the sweep budget of the tolerances.

    Returns
    -------
    PeriodicOrbit
        The orbit; the period-2 orbit of obstacles i, j is their closest pair.

    Raises
    ------
    ob.InadmissibleSequenceError
        If the sequence is not periodic, too short or names unknown obstacles.
    ob.NoConvergenceError
        If the sweep budget is exhausted, or the points stop moving while the reflection
        law is still violated by more than the orbit residual tolerance.
    """
    tolerances = tolerances or ob.Tolerances()
    max_sweeps = max_sweeps or tolerances.orbit_sweeps

    if not sequence.periodic or len(sequence) < 2:
        raise ob.InadmissibleSequenceError(
            f"Periodic orbits need a periodic sequence of length >= 2, got {sequence.symbols}."
        )
    sequence.check_alphabet(billiard.size)

    obstacles = [billiard[index] for index in sequence.symbols]
    kappa_max = [obstacle.curvature_bounds()[1] for obstacle in obstacles]
    points = _initial_points(billiard, sequence, tolerances)
    n = len(points)
    eps = np.finfo(float).eps

    for sweep in range(1, max_sweeps + 1):
        movement = 0.0
        for j in range(n):
            before, after = points[j - 1], points[(j + 1) % n]
            q = points[j]
            obstacle = obstacles[j]

            to_before, to_after = q - before, q - after
            d_before, d_after = np.linalg.norm(to_before), np.linalg.norm(to_after)
            gradient = to_before / d_before + to_after / d_after
            normal = obstacle.normal(q, tolerances)
            gradient -= (gradient @ normal) * normal

            local = d_before + d_after
            step = 1 / (1 / d_before + 1 / d_after + 2 * kappa_max[j])
            for _ in range(_MAX_HALVINGS):
                candidate = obstacle.project(q - step * gradient, tolerances)
                value = np.linalg.norm(candidate - before) + np.linalg.norm(candidate - after)
                if value <= local * (1 + 4 * eps):
                    break
                step /= 2
            else:
                candidate = q

            movement = max(movement, float(np.linalg.norm(candidate - q)))
            points[j] = candidate

        if movement < tolerances.orbit:
            residual = reflection_residual(billiard, sequence, points)
            if residual > tolerances.orbit_residual:
                raise ob.NoConvergenceError(
                    f"Orbit finder stalled for sequence {sequence.symbols} with reflection "
                    f"residual {residual:.2e} after {sweep} sweeps."
                )
            _logger.debug(
                "orbit %s converged after %d sweeps, residual %.2e",
                sequence.symbols,
                sweep,
                residual,
            )
            return PeriodicOrbit(sequence, points, orbit_length(points), residual, sweep)

    raise ob.NoConvergenceError(
        f"Orbit finder did not converge for sequence {sequence.symbols} "
        f"in {max_sweeps} sweeps."
    )


@dataclass(frozen=True)
class ClosestPair:
    """
    The closest points p_ij on K_i and p_ji on K_j and their distance.
    """

    p_ij: obt.Point
    p_ji: obt.Point
    distance: float


class ClosestPairs(Mapping[tuple[int, int], ClosestPair]):
    """
    The closest pairs of all obstacle pairs of a billiard.

    Only pairs i < j are stored; looking up (j, i) returns the same pair with
    swapped points. Iteration yields the keys (i, j) with i < j in lexicographic order.
    """

    def __init__(self, pairs: dict[tuple[int, int], ClosestPair]) -> None:
        self._pairs = dict(sorted(pairs.items()))

    def __getitem__(self, key: tuple[int, int]) -> ClosestPair:
        i, j = key
        if i < j:
            return self._pairs[(i, j)]
        stored = self._pairs[(j, i)]
        return ClosestPair(stored.p_ji, stored.p_ij, stored.distance)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._pairs)

    def __len__(self) -> int:
        return len(self._pairs)

    def point(self, i: int, j: int) -> obt.Point:
        """The point p_ij on obstacle i closest to obstacle j."""
        return self[(i, j)].p_ij

    def all_points(self) -> obt.RealData:
        """All 2·(u choose 2) points p_ij, ordered by pair and then (p_ij, p_ji)."""
        pairs = self._pairs.values()
        return np.array([point for pair in pairs for point in (pair.p_ij, pair.p_ji)])


def all_closest_pairs(
    billiard: Billiard, tolerances: ob.Tolerances | None = None
) -> ClosestPairs:
    """
    Computes the closest pair (p_ij, p_ji) for all u(u-1)/2 obstacle pairs.

    Raises
    ------
    ob.NoConvergenceError
        If one of the alternating projections fails.
    """
    pairs = {}
    for i, j in billiard.pairs():
        p_ij, p_ji, distance = closest_pair(billiard[i], billiard[j], tolerances)
        pairs[(i, j)] = ClosestPair(p_ij, p_ji, distance)
    return ClosestPairs(pairs)


def orbit_trajectory(
    billiard: Billiard,
    orbit: PeriodicOrbit,
    n_steps: int,
    front: FrontOperator | None = None,
    direction: obt.Vector | None = None,
    tolerances: ob.Tolerances | None = None,
) -> Trajectory:
    """
    Follows a periodic orbit for many collisions and evolves a front along it.

    The collisions are built from the orbit points instead of being simulated, so the
    trajectory stays on the unstable orbit for any number of steps.

    Parameters
    ----------
    billiard : Billiard
        The billiard table.
    orbit : PeriodicOrbit
        The orbit to follow; the trajectory starts at its last point.
    n_steps : int
        The number of collisions.
    front : FrontOperator | None, default=None
        The initial front leaving the last orbit point; defaults to a unit-curvature front.
    direction : obt.Vector | None, default=None
        The initial tangent direction of the front.
    tolerances : ob.Tolerances | None, default=None
        Solver tolerances.
    """
    events = events_from_points(
        billiard, orbit.points, orbit.sequence.symbols, n_steps, tolerances
    )
    if front is None:
        front = initial_front(events[0].v_in, 1.0)
    return synthetic_trajectory(events, billiard, front, direction, tolerances)
