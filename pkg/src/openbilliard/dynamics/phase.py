import math
from dataclasses import dataclass

import numpy as np

import openbilliard as ob
import openbilliard.typing as obt
from openbilliard.geometry import Billiard
from openbilliard.geometry._utils import clone_readonly, normalize


@dataclass(frozen=True)
class PhasePoint:
    """
    A point (q, v) of the billiard phase space.

    Velocities are unit vectors. A phase point on the boundary of an obstacle uses the
    outgoing convention, that is, the velocity points away from the obstacle it just left.
    That obstacle is remembered so that the next flight ignores it.

    Attributes
    ----------
    q : obt.Point
        The position.
    v : obt.Vector
        The unit velocity.
    last_obstacle : int | None, default=None
        Index of the obstacle the particle has just been reflected at, if any.

    Raises
    ------
    ob.InvalidValueError
        If the dimensions of q and v differ or v is not a unit vector within 1e-12.

    Examples
    --------
    >>> x = PhasePoint.create([-5.0, 0.0], [2.0, 0.0])
    >>> x.v
    array([1., 0.])
    """

    q: obt.Point
    v: obt.Vector
    last_obstacle: int | None = None

    def __post_init__(self) -> None:
        q = np.asarray(self.q, dtype=float)
        v = np.asarray(self.v, dtype=float)
        if q.shape != v.shape or q.shape not in [(2,), (3,)]:
            raise ob.InvalidValueError(
                f"Position and velocity must be 2D or 3D vectors, got {q.shape} and {v.shape}."
            )
        if abs(np.linalg.norm(v) - 1) > 1e-12:
            raise ob.InvalidValueError(f"Velocity {v} is not a unit vector.")

        object.__setattr__(self, "q", clone_readonly(q))
        object.__setattr__(self, "v", clone_readonly(v))

    @classmethod
    def create(
        cls, q: obt.Point, v: obt.Vector, last_obstacle: int | None = None
    ) -> "PhasePoint":
        """
        Creates a phase point, normalizing the velocity first.
        """
        velocity = normalize(np.asarray(v, dtype=float))
        return cls(np.asarray(q, dtype=float), velocity, last_obstacle)

    def reversed(
        self, billiard: Billiard | None = None, tolerances: ob.Tolerances | None = None
    ) -> "PhasePoint":
        """
        The time-reversed phase point.

        On the boundary of ``last_obstacle``, the reversed particle leaves the obstacle
        along -v⁻, the reflection of -v at the normal, so that the billiard map retraces
        the collisions in reverse order. Anywhere else, only the velocity is flipped and
        the particle heads back towards the obstacle it came from.

        Raises
        ------
        ob.InvalidValueError
            If ``last_obstacle`` is set but no billiard is given.
        """
        if self.last_obstacle is None:
            return PhasePoint(self.q, -self.v)
        if billiard is None:
            raise ob.InvalidValueError(
                "Reversing a phase point on an obstacle needs the billiard."
            )

        tolerances = tolerances or ob.Tolerances()
        obstacle = billiard[self.last_obstacle]
        if abs(obstacle.implicit(self.q)) > tolerances.boundary:
            return PhasePoint(self.q, -self.v)

        normal = obstacle.normal(self.q, tolerances)
        return PhasePoint(self.q, normalize(reflect(-self.v, normal)), self.last_obstacle)


@dataclass(frozen=True)
class CollisionEvent:
    """
    A single reflection of a billiard trajectory.

    Attributes
    ----------
    obstacle : int
        Index of the struck obstacle.
    point : obt.Point
        The reflection point q_j on the obstacle boundary.
    v_in : obt.Vector
        The incoming unit velocity v⁻.
    v_out : obt.Vector
        The outgoing unit velocity v⁺ = v⁻ - 2⟨v⁻, n⟩n.
    normal : obt.Vector
        The outward unit normal at the reflection point.
    angle : float
        The collision angle φ_j = arccos⟨v⁺, n⟩ in [0, π/2).
    flight : float
        The flight length d_j from the previous event or starting point.
    """

    obstacle: int
    point: obt.Point
    v_in: obt.Vector
    v_out: obt.Vector
    normal: obt.Vector
    angle: float
    flight: float

    @property
    def cos_angle(self) -> float:
        return float(self.v_out @ self.normal)


def reflect(v: obt.Vector, n: obt.Vector) -> obt.Vector:
    """
    Mirrors a velocity at the plane with unit normal n.

    Returns v - 2⟨v, n⟩n: the tangential part is kept, the normal part flipped.

    Examples
    --------
    >>> reflect(np.array([0.0, -1.0]), np.array([0.0, 1.0]))
    array([0., 1.])
    """
    v = np.asarray(v, dtype=float)
    n = np.asarray(n, dtype=float)
    return v - 2 * (v @ n) * n


def first_intersection(
    x: PhasePoint, billiard: Billiard, tolerances: ob.Tolerances | None = None
) -> tuple[int, float] | None:
    """
    Finds the first obstacle hit by the ray starting at x.

    The obstacle in ``x.last_obstacle`` is skipped, since the particle is leaving it.

    Returns
    -------
    tuple[int, float] | None
        The index of the struck obstacle and the positive flight time,
        or None if the ray escapes to infinity.

    Raises
    ------
    ob.TangentRayError
        If the ray grazes an obstacle ahead of it.
    ob.InvalidValueError
        If the starting point lies inside an obstacle, or the velocity points back into
        the obstacle the particle has just left.
    """
    tolerances = tolerances or ob.Tolerances()
    if x.last_obstacle is not None:
        roots = billiard[x.last_obstacle].ray_roots(x.q, x.v)
        if roots is not None and roots[1] > tolerances.boundary:
            raise ob.InvalidValueError(
                f"Velocity {x.v} points into obstacle {x.last_obstacle} instead of away "
                "from it."
            )

    best: tuple[int, float] | None = None
    for index, obstacle in enumerate(billiard):
        if index == x.last_obstacle:
            continue

        if obstacle.contains(x.q, tolerances.boundary):
            raise ob.InvalidValueError(f"Point {x.q} lies inside obstacle {index}.")

        roots = obstacle.ray_roots(x.q, x.v)
        if roots is None:
            continue

        t_lo, t_hi, discriminant = roots
        if 0.5 * (t_lo + t_hi) <= 0:
            continue
        if discriminant < tolerances.tangency:
            raise ob.TangentRayError(f"Ray from {x.q} along {x.v} grazes obstacle {index}.")

        if t_lo > 0 and (best is None or t_lo < best[1]):
            best = (index, t_lo)

    return best


def billiard_map(
    x: PhasePoint, billiard: Billiard, tolerances: ob.Tolerances | None = None
) -> tuple[PhasePoint, CollisionEvent] | None:
    """
    Applies the billiard ball map: fly to the next obstacle and reflect.

    Returns
    -------
    tuple[PhasePoint, CollisionEvent] | None
        The phase point on the struck obstacle with outgoing velocity, and the
        description of the collision; None if the particle escapes.

    Raises
    ------
    ob.TangentRayError
        If the ray grazes an obstacle.
    """
    tolerances = tolerances or ob.Tolerances()
    hit = first_intersection(x, billiard, tolerances)
    if hit is None:
        return None

    index, flight = hit
    obstacle = billiard[index]
    point = obstacle.snap(x.q + flight * x.v)
    normal = obstacle.normal(point, tolerances)
    v_out = reflect(x.v, normal)
    angle = math.acos(min(1.0, max(0.0, float(v_out @ normal))))

    event = CollisionEvent(index, point, x.v, v_out, normal, angle, flight)
    return PhasePoint(point, normalize(v_out), index), event


def flow(
    x: PhasePoint, billiard: Billiard, t: float, tolerances: ob.Tolerances | None = None
) -> PhasePoint:
    """
    Applies the billiard flow for time t.

    The particle moves with unit speed and reflects at the obstacles; after escaping,
    it continues on a straight line.

    Raises
    ------
    ob.InvalidValueError
        If t is negative.
    ob.TangentRayError
        If the trajectory grazes an obstacle before time t.
    """
    if t < 0:
        raise ob.InvalidValueError(f"Flow time must not be negative, but is {t}.")

    remaining = float(t)
    while True:
        hit = first_intersection(x, billiard, tolerances)
        if hit is None or hit[1] > remaining:
            return PhasePoint(x.q + remaining * x.v, x.v, x.last_obstacle)

        x, event = billiard_map(x, billiard, tolerances)
        remaining -= event.flight
