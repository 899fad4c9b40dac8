import math
from abc import ABC, abstractmethod
from typing import Any, Final, NamedTuple

import numpy as np
import scipy.optimize

import openbilliard as ob
import openbilliard.typing as obt

from ._utils import clone_readonly, fibonacci_sphere, normalize, tangent_basis


class BoundaryGeometry(NamedTuple):
    """
    Local differential geometry of an obstacle boundary at one point.

    Attributes
    ----------
    normal : obt.Vector
        The unit outward normal.
    curvatures : obt.RealData
        The D-1 principal curvatures in ascending order.
    frame : obt.RealData
        The principal directions as rows of a (D-1, D) array, in the order of the curvatures.
    """

    normal: obt.Vector
    curvatures: obt.RealData
    frame: obt.RealData


class ObstacleBase(ABC):
    """
    Abstract base class of a strictly convex obstacle with C² boundary.

    The billiard machinery only needs a handful of queries from an obstacle: projection
    onto the boundary, normals and principal curvatures, the support function, ray
    intersections and boundary samples. Derived classes implement these for a concrete shape.

    Parameters
    ----------
    center : obt.Point
        A point inside the obstacle; the center of symmetry for the quadric obstacles.

    Attributes
    ----------
    center : obt.Point, readonly
        The center of the obstacle.
    dimension : int, readonly
        The ambient dimension, 2 or 3.

    Raises
    ------
    ob.InvalidValueError
        If the center is not a point in two or three dimensions.
    """

    def __init__(self, center: obt.Point) -> None:
        center = np.asarray(center, dtype=float)
        if center.shape not in [(2,), (3,)]:
            raise ob.InvalidValueError(
                f"Obstacle centers must be 2D or 3D points, but got shape {center.shape}."
            )

        self.center: Final[obt.Point] = clone_readonly(center)
        self.dimension: Final[int] = len(center)

    @property
    @abstractmethod
    def kind(self) -> str:
        """The name of the obstacle type as used in configuration files."""
        raise NotImplementedError()

    @abstractmethod
    def implicit(self, p: obt.RealData) -> obt.RealData | float:
        """
        Evaluates the implicit surface function, negative inside and zero on the boundary.

        Accepts a single point or an array of points of shape (N, D).
        """
        raise NotImplementedError()

    @abstractmethod
    def project(self, p: obt.Point, tolerances: ob.Tolerances | None = None) -> obt.Point:
        """
        Returns the boundary point closest to p.

        Works for points inside and outside of the obstacle.

        Raises
        ------
        ob.DegeneratePointError
            If p has several closest boundary points, for example the center of a ball.
        """
        raise NotImplementedError()

    @abstractmethod
    def normal_and_curvatures(
        self, q: obt.Point, tolerances: ob.Tolerances | None = None
    ) -> BoundaryGeometry:
        """
        Returns normal, principal curvatures and principal directions at a boundary point.

        Raises
        ------
        ob.PointOffBoundaryError
            If q is not on the boundary within the boundary tolerance.
        """
        raise NotImplementedError()

    @abstractmethod
    def support(self, w: obt.RealData) -> obt.RealData | float:
        """
        The support function h(w) = max ⟨x, w⟩ over the obstacle.

        Accepts a single direction or an array of directions of shape (N, D).
        """
        raise NotImplementedError()

    @abstractmethod
    def boundary_samples(self, n: int) -> obt.RealData:
        """
        Returns about n boundary points spread over the whole boundary, shape (n, D).
        """
        raise NotImplementedError()

    @abstractmethod
    def principal_curvatures(self, points: obt.RealData) -> obt.RealData:
        """
        Vectorized principal curvatures of boundary points, shape (N, D-1), ascending per row.
        """
        raise NotImplementedError()

    @abstractmethod
    def curvature_bounds(self) -> tuple[float, float]:
        """
        The minimum and maximum principal curvature over the whole boundary.
        """
        raise NotImplementedError()

    @abstractmethod
    def ray_roots(self, q: obt.Point, v: obt.Vector) -> tuple[float, float, float] | None:
        """
        Intersects the line q + t v with the boundary.

        Returns
        -------
        tuple[float, float, float] | None
            None if the line misses the obstacle, otherwise the two roots t_lo <= t_hi
            and the discriminant normalized such that it is comparable to a squared time.
        """
        raise NotImplementedError()

    @abstractmethod
    def snap(self, q: obt.Point) -> obt.Point:
        """
        Moves a point that is already very close to the boundary exactly onto it.
        """
        raise NotImplementedError()

    @abstractmethod
    def describe(self) -> dict[str, Any]:
        """
        Returns the parameters of the obstacle in the form used by configuration files.
        """
        raise NotImplementedError()

    def sort_key(self) -> tuple[float, ...]:
        """
        A key that totally orders obstacles; equal keys mean equal obstacles.
        """
        return tuple(self.center)

    def normal(self, q: obt.Point, tolerances: ob.Tolerances | None = None) -> obt.Vector:
        """
        The unit outward normal at the boundary point q.
        """
        return self.normal_and_curvatures(q, tolerances).normal

    def contains(self, p: obt.Point, tolerance: float = 0.0) -> bool:
        """
        Returns whether p lies inside the obstacle by more than the tolerance.
        """
        return bool(self.implicit(p) < -tolerance)


class QuadricObstacle(ObstacleBase):
    """
    An obstacle bounded by an ellipse or ellipsoid, possibly rotated.

    The boundary is the set of points x with (x-c)ᵀ A (x-c) = 1, where the shape matrix is
    A = R diag(1/a²) Rᵀ with the semi-axes a and the orthonormal frame R whose columns are
    the axis directions. All geometric queries have closed forms or reduce to a scalar root
    search, which keeps the curvature constants exact.

    Parameters
    ----------
    center : obt.Point
        The center of the quadric.
    semi_axes : obt.RealData
        The semi-axes, one per ambient dimension, all strictly positive.
    frame : obt.RealData | None, default=None
        The orthonormal axis directions as columns. Defaults to the identity.

    Attributes
    ----------
    semi_axes : obt.RealData, readonly
        The semi-axes along the columns of the frame.
    frame : obt.RealData, readonly
        The orthonormal frame.
    shape_matrix : obt.RealData, readonly
        The matrix A of the implicit equation.

    Raises
    ------
    ob.InvalidValueError
        If the semi-axes are not positive or the frame is not orthonormal.
    """

    def __init__(
        self,
        center: obt.Point,
        semi_axes: obt.RealData,
        frame: obt.RealData | None = None,
    ) -> None:
        super().__init__(center)

        semi_axes = np.asarray(semi_axes, dtype=float)
        if semi_axes.shape != (self.dimension,):
            raise ob.InvalidValueError(
                f"Need {self.dimension} semi-axes for a {self.dimension}D obstacle, "
                f"got shape {semi_axes.shape}."
            )
        if np.any(semi_axes <= 0) or not np.all(np.isfinite(semi_axes)):
            raise ob.InvalidValueError(f"Semi-axes must be positive, but are {semi_axes}.")

        if frame is None:
            frame = np.eye(self.dimension)
        frame = np.asarray(frame, dtype=float)
        if frame.shape != (self.dimension, self.dimension):
            raise ob.InvalidValueError(
                f"Frame has shape {frame.shape}, expected a square matrix."
            )
        if not np.allclose(frame.T @ frame, np.eye(self.dimension), rtol=0, atol=1e-10):
            raise ob.InvalidValueError("The frame of an obstacle must be orthonormal.")

        self.semi_axes: Final[obt.RealData] = clone_readonly(semi_axes)
        self.frame: Final[obt.RealData] = clone_readonly(frame)
        self.shape_matrix: Final[obt.RealData] = clone_readonly(
            frame @ np.diag(1 / semi_axes**2) @ frame.T
        )
        self._inverse_shape = clone_readonly(frame @ np.diag(semi_axes**2) @ frame.T)

    @property
    def kind(self) -> str:
        return "ellipse" if self.dimension == 2 else "ellipsoid"

    def _local(self, p: obt.RealData) -> obt.RealData:
        return (np.asarray(p, dtype=float) - self.center) @ self.frame

    def _global(self, y: obt.RealData) -> obt.RealData:
        return self.center + y @ self.frame.T

    def implicit(self, p):
        y = self._local(p)
        return np.sum((y / self.semi_axes) ** 2, axis=-1) - 1

    def snap(self, q: obt.Point) -> obt.Point:
        scaled = self._local(q) / self.semi_axes
        norm = np.linalg.norm(scaled)
        if norm == 0:
            raise ob.DegeneratePointError(
                "Cannot snap the center of an obstacle to its boundary."
            )
        return self._global(self.semi_axes * scaled / norm)

    def project(self, p: obt.Point, tolerances: ob.Tolerances | None = None) -> obt.Point:
        tolerances = tolerances or ob.Tolerances()
        a = self.semi_axes
        y = self._local(p)
        if np.linalg.norm(y) <= 1e-14 * a.max():
            raise ob.DegeneratePointError(f"Point {p} is the center of the obstacle.")

        def secular(t: float) -> float:
            return float(np.sum((a * y / (a**2 + t)) ** 2) - 1)

        # The closest point is x_i = a_i² y_i / (a_i² + t) for the root t of the
        # secular equation; t > 0 outside, -a_min² < t <= 0 inside.
        value = secular(0.0)
        if abs(value) <= tolerances.projection:
            return self.snap(p)

        if value > 0:
            lo, hi = 0.0, a.max() * np.linalg.norm(y) + a.max() ** 2
        else:
            lo, hi = -(a.min() ** 2) * (1 - 1e-14), 0.0
            if not secular(lo) > 0:
                raise ob.DegeneratePointError(
                    f"Point {p} lies on the medial set of the obstacle; "
                    "its closest boundary point is not unique."
                )

        t = scipy.optimize.brentq(secular, lo, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps)
        x = a**2 * y / (a**2 + t)
        x /= math.sqrt(np.sum((x / a) ** 2))

        return self._global(x)

    def _check_boundary(self, q: obt.Point, tolerances: ob.Tolerances) -> None:
        residual = abs(float(self.implicit(q)))
        if residual > tolerances.boundary:
            raise ob.PointOffBoundaryError(
                f"Point {q} is off the obstacle boundary, implicit residual {residual:.3e}."
            )

    def normal_and_curvatures(
        self, q: obt.Point, tolerances: ob.Tolerances | None = None
    ) -> BoundaryGeometry:
        tolerances = tolerances or ob.Tolerances()
        q = np.asarray(q, dtype=float)
        self._check_boundary(q, tolerances)

        gradient = self.shape_matrix @ (q - self.center)
        gradient_norm = np.linalg.norm(gradient)
        normal = gradient / gradient_norm

        # second fundamental form tᵀAt / |A(q-c)| on the tangent plane
        tangents = tangent_basis(normal)
        form = tangents @ self.shape_matrix @ tangents.T / gradient_norm
        curvatures, vectors = np.linalg.eigh((form + form.T) / 2)
        frame = vectors.T @ tangents

        return BoundaryGeometry(normal, curvatures, frame)

    def principal_curvatures(self, points: obt.RealData) -> obt.RealData:
        points = np.atleast_2d(points)
        gradients = (points - self.center) @ self.shape_matrix
        norms = np.linalg.norm(gradients, axis=1)
        normals = gradients / norms[:, np.newaxis]

        outer = normals[:, :, np.newaxis] * normals[:, np.newaxis, :]
        projector = np.eye(self.dimension) - outer
        shape_operator = projector @ self.shape_matrix @ projector
        shape_operator /= norms[:, np.newaxis, np.newaxis]

        # the normal direction contributes the zero eigenvalue, the others are positive
        return np.linalg.eigvalsh(shape_operator)[:, 1:]

    def support(self, w):
        w = np.asarray(w, dtype=float)
        spread = np.sqrt(np.sum((w @ self._inverse_shape) * w, axis=-1))
        return w @ self.center + spread

    def support_point(self, w: obt.Vector) -> obt.Point:
        """
        The boundary point where the support function in direction w is attained.
        """
        w = np.asarray(w, dtype=float)
        return self.center + self._inverse_shape @ w / math.sqrt(w @ self._inverse_shape @ w)

    def boundary_samples(self, n: int) -> obt.RealData:
        if self.dimension == 2:
            angles = 2 * math.pi * np.arange(n) / n
            return self.boundary_at(angles)
        return self._global(fibonacci_sphere(n) * self.semi_axes)

    def boundary_at(self, angles: obt.RealData) -> obt.RealData:
        """
        Maps parameter angles to boundary points.

        In 2D, an array of shape (N,) holds one angle per point. In 3D, an array of shape
        (N, 2) holds the polar and azimuthal angle of each point.
        """
        angles = np.asarray(angles, dtype=float)
        if self.dimension == 2:
            local = np.stack([np.cos(angles), np.sin(angles)], axis=-1)
        else:
            polar, azimuth = angles[..., 0], angles[..., 1]
            local = np.stack(
                [
                    np.sin(polar) * np.cos(azimuth),
                    np.sin(polar) * np.sin(azimuth),
                    np.cos(polar),
                ],
                axis=-1,
            )
        return self._global(local * self.semi_axes)

    def section_samples(self, origin: obt.Point, basis: obt.RealData, n: int) -> obt.RealData:
        """
        Samples the intersection of the boundary with a plane in 3D.

        Parameters
        ----------
        origin : obt.Point
            A point in the plane.
        basis : obt.RealData
            Two orthonormal rows spanning the plane.
        n : int
            The number of samples.

        Returns
        -------
        obt.RealData
            Points of shape (n, 3), or an empty array if the plane misses the obstacle.
        """
        offset = np.asarray(origin, dtype=float) - self.center
        matrix = basis @ self.shape_matrix @ basis.T
        linear = basis @ self.shape_matrix @ offset
        constant = offset @ self.shape_matrix @ offset - 1

        # (s - s0)ᵀ M (s - s0) = r is the section ellipse in plane coordinates s
        s0 = -np.linalg.solve(matrix, linear)
        r = s0 @ matrix @ s0 - constant
        if r <= 0:
            return np.empty((0, len(offset)))

        eigenvalues, eigenvectors = np.linalg.eigh(matrix)
        angles = 2 * math.pi * np.arange(n) / n
        circle = np.stack([np.cos(angles), np.sin(angles)], axis=-1)
        s = s0 + (circle * np.sqrt(r / eigenvalues)) @ eigenvectors.T

        return self.center + offset + s @ basis

    def curvature_bounds(self) -> tuple[float, float]:
        a_max = float(self.semi_axes.max())
        a_min = float(self.semi_axes.min())
        return a_min / a_max**2, a_max / a_min**2

    def ray_roots(self, q: obt.Point, v: obt.Vector) -> tuple[float, float, float] | None:
        y = self._local(q) / self.semi_axes
        w = self._local(np.asarray(v) + self.center) / self.semi_axes

        a2 = float(w @ w)
        b = float(y @ w)
        c = float(y @ y) - 1
        discriminant = b * b - a2 * c
        if discriminant < 0:
            return None

        root = math.sqrt(discriminant)
        return (-b - root) / a2, (-b + root) / a2, discriminant / a2**2

    def sort_key(self) -> tuple[float, ...]:
        return tuple(self.center) + tuple(self.semi_axes) + tuple(self.frame.ravel())

    def describe(self) -> dict[str, Any]:
        if self.dimension == 2:
            return {
                "kind": "ellipse",
                "center": self.center.tolist(),
                "semi_axes": self.semi_axes.tolist(),
                "angle": math.atan2(self.frame[1, 0], self.frame[0, 0]),
            }
        return {
            "kind": "ellipsoid",
            "center": self.center.tolist(),
            "semi_axes": self.semi_axes.tolist(),
            "frame": self.frame.tolist(),
        }

    def __repr__(self) -> str:
        return (
            f"{type(self).__name__}(center={self.center.tolist()}, "
            f"semi_axes={self.semi_axes.tolist()})"
        )


class Ball(QuadricObstacle):
    """
    A disk in 2D or a ball in 3D.

    Parameters
    ----------
    center : obt.Point
        The center of the ball; its length fixes the ambient dimension.
    radius : float
        The radius, strictly positive.

    Raises
    ------
    ob.InvalidValueError
        If the radius is not positive.
    """

    def __init__(self, center: obt.Point, radius: float) -> None:
        if not radius > 0:
            raise ob.InvalidValueError(f"Radius of a ball must be positive, but is {radius}.")

        dimension = len(center)
        super().__init__(center, np.full(dimension, float(radius)))
        self.radius: Final[float] = float(radius)

    @property
    def kind(self) -> str:
        return "ball"

    def project(self, p: obt.Point, tolerances: ob.Tolerances | None = None) -> obt.Point:
        offset = np.asarray(p, dtype=float) - self.center
        distance = np.linalg.norm(offset)
        if distance <= 1e-14 * self.radius:
            raise ob.DegeneratePointError(f"Point {p} is the center of the ball.")
        return self.center + self.radius * offset / distance

    def normal_and_curvatures(
        self, q: obt.Point, tolerances: ob.Tolerances | None = None
    ) -> BoundaryGeometry:
        tolerances = tolerances or ob.Tolerances()
        q = np.asarray(q, dtype=float)
        self._check_boundary(q, tolerances)

        normal = normalize(q - self.center)
        curvatures = np.full(self.dimension - 1, 1 / self.radius)
        return BoundaryGeometry(normal, curvatures, tangent_basis(normal))

    def describe(self) -> dict[str, Any]:
        return {"kind": "ball", "center": self.center.tolist(), "radius": self.radius}

    def __repr__(self) -> str:
        return f"Ball(center={self.center.tolist()}, radius={self.radius})"


class Ellipse(QuadricObstacle):
    """
    A rotated ellipse in 2D.

    Parameters
    ----------
    center : obt.Point
        The center, a 2D point.
    a, b : float
        The major and minor semi-axis, a >= b > 0.
    angle : float, default=0
        Rotation of the major axis against the x-axis in radians.

    Raises
    ------
    ob.InvalidValueError
        If the center is not 2D or the semi-axes are not ordered and positive.
    """

    def __init__(self, center: obt.Point, a: float, b: float, angle: float = 0.0) -> None:
        if len(center) != 2:
            raise ob.InvalidValueError("An ellipse needs a 2D center.")
        if not a >= b > 0:
            raise ob.InvalidValueError(
                f"Ellipse semi-axes must satisfy a >= b > 0, got {a}, {b}."
            )

        cos, sin = math.cos(angle), math.sin(angle)
        super().__init__(center, [a, b], [[cos, -sin], [sin, cos]])
        self.angle: Final[float] = float(angle)

    def describe(self) -> dict[str, Any]:
        return {
            "kind": "ellipse",
            "center": self.center.tolist(),
            "a": float(self.semi_axes[0]),
            "b": float(self.semi_axes[1]),
            "angle": self.angle,
        }


class Ellipsoid(QuadricObstacle):
    """
    An ellipsoid in 3D with semi-axes a >= b >= c > 0 along the columns of a frame.

    Raises
    ------
    ob.InvalidValueError
        If the center is not 3D, the semi-axes are not ordered and positive,
        or the frame is not orthonormal.
    """

    def __init__(
        self,
        center: obt.Point,
        semi_axes: obt.RealData,
        frame: obt.RealData | None = None,
    ) -> None:
        if len(center) != 3:
            raise ob.InvalidValueError("An ellipsoid needs a 3D center.")
        a, b, c = semi_axes
        if not a >= b >= c > 0:
            raise ob.InvalidValueError(
                f"Ellipsoid semi-axes must satisfy a >= b >= c > 0, got {a}, {b}, {c}."
            )
        super().__init__(center, semi_axes, frame)
