import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

import openbilliard as ob
import openbilliard.typing as obt
from openbilliard.geometry import Billiard
from openbilliard.geometry._utils import normalize

from .front import (
    FrontOperator,
    delta_factor,
    initial_front,
    propagate_front,
    reflect_front,
    theta_operator,
    transport_front,
)
from .phase import CollisionEvent, PhasePoint, billiard_map, reflect

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Trajectory:
    """
    A finite billiard trajectory together with the evolution of a convex front along it.

    The indexing follows the collisions: ``fronts[0]`` and ``directions[0]`` describe the
    initial front, ``fronts[j]`` the front right after the j-th reflection. The contraction
    factor ``deltas[j]`` belongs to the flight that leaves front j, so there is one factor
    per collision.

    Attributes
    ----------
    events : tuple[CollisionEvent, ...]
        The reflections in chronological order.
    fronts : tuple[FrontOperator, ...]
        The front operators, one more than there are events.
    directions : tuple[obt.Vector, ...]
        The tracked unit tangent û_j of each front, as ambient vectors.
    deltas : tuple[float, ...]
        The contraction factors δ_j.
    escaped : bool
        True if the particle left the billiard before the step limit.
    final : PhasePoint | None
        The phase point after the last reflection, None for synthetic trajectories.
    """

    events: tuple[CollisionEvent, ...]
    fronts: tuple[FrontOperator, ...]
    directions: tuple[obt.Vector, ...]
    deltas: tuple[float, ...]
    escaped: bool
    final: PhasePoint | None = None

    def __len__(self) -> int:
        return len(self.events)

    @property
    def symbols(self) -> tuple[int, ...]:
        """The indices of the struck obstacles."""
        return tuple(event.obstacle for event in self.events)

    @property
    def points(self) -> obt.RealData:
        dimension = len(self.fronts[0].velocity)
        points = np.array([event.point for event in self.events])
        return points.reshape(len(self.events), dimension)

    @property
    def flights(self) -> obt.RealData:
        return np.array([event.flight for event in self.events])

    @property
    def angles(self) -> obt.RealData:
        return np.array([event.angle for event in self.events])

    @property
    def curvatures(self) -> obt.RealData:
        """The directional curvatures k_j = ⟨𝓑_j û_j, û_j⟩, starting with the initial front."""
        return np.array(
            [front.directional_curvature(u) for front, u in zip(self.fronts, self.directions)]
        )

    @property
    def delta_products(self) -> obt.RealData:
        """The running products δ_0 δ_1 ... δ_j."""
        return np.cumprod(self.deltas)

    @property
    def contraction(self) -> float:
        """The product of all contraction factors."""
        return float(np.prod(self.deltas))

    def flight_time(self) -> float:
        """The total flight time up to the last collision."""
        return float(np.sum(self.flights))


def track_front(
    events: Sequence[CollisionEvent],
    billiard: Billiard,
    front: FrontOperator,
    direction: obt.Vector | None = None,
    tolerances: ob.Tolerances | None = None,
) -> tuple[list[FrontOperator], list[obt.Vector], list[float]]:
    """
    Evolves a front and a tangent direction along a sequence of collisions.

    Per collision, the front flies freely, is carried across the reflection and receives
    the curvature increment 2Θ. The tangent direction follows the linearized flow, that is,
    û ↦ (I + d𝓑)û normalized, and is mirrored at the reflection.

    Parameters
    ----------
    events : Sequence[CollisionEvent]
        The collisions; the first flight starts where the initial front is.
    billiard : Billiard
        The billiard providing the obstacle curvatures.
    front : FrontOperator
        The initial front; its velocity must be the incoming velocity of the first event.
    direction : obt.Vector | None, default=None
        The initial unit tangent, ambient. Defaults to the first basis vector of the front.
    tolerances : ob.Tolerances | None, default=None
        Uses the grazing and basis thresholds.

    Returns
    -------
    tuple[list[FrontOperator], list[obt.Vector], list[float]]
        The fronts and directions (initial ones included) and the contraction factors.

    Raises
    ------
    ob.GrazingCollisionError
        If a collision is too close to tangential.
    """
    tolerances = tolerances or ob.Tolerances()
    if direction is None:
        u = front.basis[0]
    else:
        u = normalize(front.basis.T @ front.coordinates(direction))

    fronts, directions, deltas = [front], [u], []
    for event in events:
        d = event.flight
        deltas.append(delta_factor(front, u, d))

        coordinates = front.coordinates(u)
        u = normalize((coordinates + d * front.matrix @ coordinates) @ front.basis)
        front = propagate_front(front, d)

        front = transport_front(front, event.normal, event.v_out)
        u = normalize(front.basis.T @ (front.basis @ reflect(u, event.normal)))

        geometry = billiard[event.obstacle].normal_and_curvatures(event.point, tolerances)
        theta = theta_operator(
            geometry.curvatures,
            geometry.frame,
            event.normal,
            event.v_out,
            front.basis,
            tolerances,
        )
        front = reflect_front(front, theta, tolerances)

        fronts.append(front)
        directions.append(u)

    return fronts, directions, deltas


def events_from_points(
    billiard: Billiard,
    points: obt.RealData,
    obstacles: Sequence[int],
    n_events: int | None = None,
    tolerances: ob.Tolerances | None = None,
) -> list[CollisionEvent]:
    """
    Builds the collisions of a closed polygonal path of reflection points.

    This is used to follow periodic orbits for arbitrarily many periods; direct simulation
    would lose the orbit after a few dozen collisions since it is unstable.

    Parameters
    ----------
    billiard : Billiard
        The billiard the points belong to.
    points : obt.RealData
        Reflection points of shape (n, D), visited cyclically.
    obstacles : Sequence[int]
        The obstacle of each point.
    n_events : int | None, default=None
        Number of collisions to build; defaults to one period. The path starts at the
        last point, so the first event is the reflection at points[0].
    tolerances : ob.Tolerances | None, default=None
        Uses the boundary tolerance.
    """
    points = np.asarray(points, dtype=float)
    n = len(points)
    if n < 2 or len(obstacles) != n:
        raise ob.InvalidValueError("Need at least two points, each with an obstacle index.")
    n_events = n if n_events is None else n_events

    events = []
    for j in range(n_events):
        previous, current = points[(j - 1) % n], points[j % n]
        index = obstacles[j % n]

        offset = current - previous
        flight = float(np.linalg.norm(offset))
        v_in = offset / flight
        normal = billiard[index].normal(current, tolerances)
        v_out = reflect(v_in, normal)
        angle = math.acos(min(1.0, max(0.0, float(v_out @ normal))))
        events.append(CollisionEvent(index, current, v_in, v_out, normal, angle, flight))

    return events


def simulate(
    x0: PhasePoint,
    billiard: Billiard,
    n_max: int,
    front: FrontOperator | None = None,
    direction: obt.Vector | None = None,
    tolerances: ob.Tolerances | None = None,
    options: ob.EstimateOptions | None = None,
) -> Trajectory:
    """
    Simulates a trajectory and the convex front attached to it.

    The simulation stops at escape or after n_max collisions. Along the way, the front
    operator, the tracked tangent direction and the contraction factors δ_j are recorded.

    Parameters
    ----------
    x0 : PhasePoint
        The starting point.
    billiard : Billiard
        The billiard table.
    n_max : int
        The maximum number of collisions.
    front : FrontOperator | None, default=None
        The initial front. Defaults to a point-source proxy with curvature k₀⁺.
    direction : obt.Vector | None, default=None
        Initial unit tangent direction of the front.
    tolerances : ob.Tolerances | None, default=None
        Solver tolerances.
    options : ob.EstimateOptions | None, default=None
        Provides k₀⁺ for the default front.

    Returns
    -------
    Trajectory
        The collisions, fronts and contraction factors.

    Raises
    ------
    ob.TangentRayError
        If the trajectory grazes an obstacle.
    ob.InvalidValueError
        If n_max is negative.
    """
    if n_max < 0:
        raise ob.InvalidValueError(f"Number of collisions must not be negative: {n_max}.")
    tolerances = tolerances or ob.Tolerances()
    options = options or ob.EstimateOptions()
    if front is None:
        front = initial_front(x0.v, options.k0_plus)

    events = []
    x = x0
    escaped = False
    for _ in range(n_max):
        result = billiard_map(x, billiard, tolerances)
        if result is None:
            escaped = True
            break
        x, event = result
        events.append(event)

    _logger.debug("simulated %d collisions, escaped=%s", len(events), escaped)
    fronts, directions, deltas = track_front(events, billiard, front, direction, tolerances)
    return Trajectory(
        tuple(events), tuple(fronts), tuple(directions), tuple(deltas), escaped, x
    )


def synthetic_trajectory(
    events: Sequence[CollisionEvent],
    billiard: Billiard,
    front: FrontOperator,
    direction: obt.Vector | None = None,
    tolerances: ob.Tolerances | None = None,
) -> Trajectory:
    """
    Wraps a prescribed collision sequence and its front evolution into a trajectory.
    """
    fronts, directions, deltas = track_front(events, billiard, front, direction, tolerances)
    return Trajectory(tuple(events), tuple(fronts), tuple(directions), tuple(deltas), False)
