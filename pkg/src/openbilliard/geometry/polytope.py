import logging
from typing import Final

import numpy as np
import scipy.spatial

import openbilliard as ob
import openbilliard.typing as obt

from ._utils import clone_readonly

_logger = logging.getLogger(__name__)


class ConvexPolytope:
    """
    The convex hull of finitely many points in 2D or 3D.

    A hull of full dimension stores the outward facet planes from Qhull. If the points are
    affinely dependent, the hull is flagged as degenerate and computed inside the affine
    subspace spanned by the points; distances then combine the in-subspace distance with
    the distance to the subspace.

    Use :py:func:`convex_hull` to construct instances.

    Attributes
    ----------
    vertices : obt.RealData, readonly
        The hull vertices, shape (n, D). In 2D and for planar hulls they form a
        counter-clockwise loop in the hull's own plane coordinates.
    faces : tuple[tuple[int, ...], ...], readonly
        Facets as tuples of vertex indices: triangles with outward orientation in 3D,
        edges of the vertex loop in 2D and for planar hulls.
    normals : obt.RealData, readonly
        Outward unit normals of the facets in the ambient space. For degenerate hulls they
        lie inside the affine hull.
    dimension : int, readonly
        The ambient dimension D.
    affine_dimension : int, readonly
        The dimension of the affine hull of the points, at most D.
    origin : obt.Point, readonly
        A point of the affine hull, the centroid of the input points.
    basis : obt.RealData, readonly
        Orthonormal rows spanning the affine hull, shape (affine_dimension, D).
    """

    def __init__(
        self,
        vertices: obt.RealData,
        faces: tuple[tuple[int, ...], ...],
        equations: obt.RealData,
        origin: obt.Point,
        basis: obt.RealData,
        interval: tuple[float, float] | None = None,
    ) -> None:
        self.vertices: Final[obt.RealData] = clone_readonly(vertices)
        self.faces: Final[tuple[tuple[int, ...], ...]] = faces
        self._equations = clone_readonly(equations)
        self.normals: Final[obt.RealData] = clone_readonly(equations[:, :-1] @ basis)
        self.dimension: Final[int] = self.vertices.shape[1]
        self.affine_dimension: Final[int] = len(basis)
        self.origin: Final[obt.Point] = clone_readonly(origin)
        self.basis: Final[obt.RealData] = clone_readonly(basis)
        self._interval = interval

    @property
    def is_degenerate(self) -> bool:
        """True if the points do not span the ambient space."""
        return self.affine_dimension < self.dimension

    def signed_distance(self, points: obt.RealData) -> obt.RealData | float:
        """
        Approximate signed distance of points to the hull boundary.

        Inside a full-dimensional hull, this is the maximum over the facet planes of the
        signed plane distances, so it is non-positive exactly for points inside.
        For degenerate hulls the distance from the affine hull is added as another
        positive term of the maximum.

        Parameters
        ----------
        points : obt.RealData
            A single point of shape (D,) or an array of points of shape (N, D).

        Returns
        -------
        obt.RealData | float
            One value per point.
        """
        points = np.asarray(points, dtype=float)
        single = points.ndim == 1
        points = np.atleast_2d(points)

        relative = points - self.origin
        coordinates = relative @ self.basis.T
        residual = np.linalg.norm(relative - coordinates @ self.basis, axis=1)

        if self.affine_dimension >= 2:
            planes = coordinates @ self._equations[:, :-1].T + self._equations[:, -1]
            inside = np.max(planes, axis=1)
        elif self.affine_dimension == 1:
            lo, hi = self._interval
            inside = np.maximum(lo - coordinates[:, 0], coordinates[:, 0] - hi)
        else:
            inside = np.zeros(len(points))

        if self.is_degenerate:
            result = np.maximum(inside, residual)
        else:
            result = inside

        return float(result[0]) if single else result

    def contains(self, points: obt.RealData, tolerance: float = 1e-9) -> bool:
        """
        Returns whether all given points lie inside the hull up to the tolerance.
        """
        return bool(np.all(np.asarray(self.signed_distance(points)) <= tolerance))

    def diameter(self) -> float:
        """
        The largest distance between two vertices.
        """
        differences = self.vertices[:, np.newaxis, :] - self.vertices[np.newaxis, :, :]
        return float(np.sqrt(np.max(np.sum(differences**2, axis=-1))))

    def __repr__(self) -> str:
        return (
            f"ConvexPolytope({len(self.vertices)} vertices, dimension {self.dimension}, "
            f"affine dimension {self.affine_dimension})"
        )


def convex_hull(points: obt.RealData, tolerance: float = 1e-9) -> ConvexPolytope:
    """
    Computes the convex hull of points in 2D or 3D.

    Interior points are dropped. If the points are affinely dependent, the hull is computed
    in the lower-dimensional affine subspace and flagged via
    :py:attr:`ConvexPolytope.is_degenerate`; this is not an error.

    Parameters
    ----------
    points : obt.RealData
        Array of shape (N, D) with D = 2 or 3.
    tolerance : float, default=1e-9
        Relative singular value threshold for detecting affine dependence.

    Raises
    ------
    ob.InvalidValueError
        If the points are not a non-empty list of 2D or 3D points.
    """
    points = np.asarray(points, dtype=float)
    if points.ndim != 2 or points.shape[1] not in (2, 3) or len(points) == 0:
        raise ob.InvalidValueError(
            f"Expected a non-empty array of 2D or 3D points, got shape {points.shape}."
        )

    origin = points.mean(axis=0)
    centered = points - origin
    _, singular_values, right = np.linalg.svd(centered, full_matrices=False)
    scale = max(1.0, float(np.abs(centered).max()))
    rank = int(np.sum(singular_values > tolerance * scale))
    basis = right[:rank]
    if rank == points.shape[1] and np.linalg.det(basis) < 0:
        basis[-1] *= -1
    coordinates = centered @ basis.T

    if rank < points.shape[1]:
        _logger.warning(
            "convex hull of %d points is degenerate (affine dimension %d)", len(points), rank
        )

    if rank == 0:
        return ConvexPolytope(points[:1], (), np.empty((0, 1)), origin, basis)

    if rank == 1:
        lo, hi = int(np.argmin(coordinates[:, 0])), int(np.argmax(coordinates[:, 0]))
        return ConvexPolytope(
            points[[lo, hi]],
            ((0, 1),),
            np.empty((0, 2)),
            origin,
            basis,
            (float(coordinates[lo, 0]), float(coordinates[hi, 0])),
        )

    hull = scipy.spatial.ConvexHull(coordinates)
    if rank == 2:
        # Qhull lists 2D hull vertices counter-clockwise in plane coordinates
        order = hull.vertices
        loop = tuple((k, (k + 1) % len(order)) for k in range(len(order)))
        equations = _edge_equations(coordinates[order])
        return ConvexPolytope(points[order], loop, equations, origin, basis)

    # full 3D: renumber the simplices to index into the vertex array
    index = {int(vertex): k for k, vertex in enumerate(hull.vertices)}
    faces = []
    for simplex, equation in zip(hull.simplices, hull.equations):
        triangle = [index[int(vertex)] for vertex in simplex]
        a, b, c = coordinates[simplex]
        if np.cross(b - a, c - a) @ equation[:3] < 0:
            triangle[1], triangle[2] = triangle[2], triangle[1]
        faces.append(tuple(triangle))

    return ConvexPolytope(points[hull.vertices], tuple(faces), hull.equations, origin, basis)


def _edge_equations(loop: obt.RealData) -> obt.RealData:
    # outward normals of a counter-clockwise polygon point to the right of each edge
    following = np.roll(loop, -1, axis=0)
    edges = following - loop
    normals = np.column_stack([edges[:, 1], -edges[:, 0]])
    normals /= np.linalg.norm(normals, axis=1)[:, np.newaxis]
    offsets = -np.sum(normals * loop, axis=1)
    return np.column_stack([normals, offsets])
