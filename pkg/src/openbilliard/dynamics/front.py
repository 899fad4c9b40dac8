from dataclasses import dataclass

import numpy as np

import openbilliard as ob
import openbilliard.typing as obt
from openbilliard.geometry._utils import clone_readonly, normalize, tangent_basis

from .phase import reflect


@dataclass(frozen=True)
class FrontOperator:
    """
    Second fundamental form of a convex front, stored on an explicit basis.

    A front is a hypersurface moving with the particles along its unit normal v. Its
    curvature is a symmetric operator on the plane orthogonal to v; we store the operator
    as a (D-1) x (D-1) matrix together with the orthonormal basis it refers to. In 2D this
    is a 1x1 matrix holding the scalar curvature k.

    Attributes
    ----------
    matrix : obt.RealData
        The symmetric matrix of the operator in the given basis.
    basis : obt.RealData
        Orthonormal rows of shape (D-1, D) spanning the plane orthogonal to the velocity.
    velocity : obt.Vector
        The unit direction of motion of the front.

    Raises
    ------
    ob.InvalidValueError
        If the shapes do not match or the matrix is not symmetric within 1e-12.
    ob.BasisMismatchError
        If the basis is not orthonormal or not orthogonal to the velocity.
    """

    matrix: obt.RealData
    basis: obt.RealData
    velocity: obt.Vector

    def __post_init__(self) -> None:
        matrix = np.atleast_2d(np.asarray(self.matrix, dtype=float))
        basis = np.atleast_2d(np.asarray(self.basis, dtype=float))
        velocity = np.asarray(self.velocity, dtype=float)

        dimension = len(velocity)
        if matrix.shape != (dimension - 1, dimension - 1) or basis.shape != (
            dimension - 1,
            dimension,
        ):
            raise ob.InvalidValueError(
                f"Front matrix {matrix.shape} and basis {basis.shape} do not fit "
                f"a {dimension}D velocity."
            )
        if np.max(np.abs(matrix - matrix.T)) > 1e-12 * max(1.0, np.max(np.abs(matrix))):
            raise ob.InvalidValueError("Front operator matrix is not symmetric.")

        _check_basis(basis, velocity, 1e-10)

        object.__setattr__(self, "matrix", clone_readonly((matrix + matrix.T) / 2))
        object.__setattr__(self, "basis", clone_readonly(basis))
        object.__setattr__(self, "velocity", clone_readonly(velocity))

    @property
    def eigenvalues(self) -> obt.RealData:
        """The principal curvatures of the front in ascending order."""
        return np.linalg.eigvalsh(self.matrix)

    @property
    def curvature(self) -> float:
        """The scalar curvature of a 2D front, or the largest principal curvature in 3D."""
        return float(self.eigenvalues[-1])

    def is_positive_definite(self) -> bool:
        return bool(self.eigenvalues[0] > 0)

    def coordinates(self, u: obt.Vector) -> obt.RealData:
        """
        Expresses a tangent vector in the basis of the front.

        Accepts either ambient vectors of length D or basis coordinates of length D-1.
        """
        u = np.asarray(u, dtype=float)
        if u.shape == (len(self.velocity),):
            return self.basis @ u
        if u.shape == (len(self.velocity) - 1,):
            return u
        raise ob.InvalidValueError(f"Tangent vector has invalid shape {u.shape}.")

    def directional_curvature(self, u: obt.Vector) -> float:
        """
        The normal curvature ⟨𝓑û, û⟩ of the front along the unit tangent û.
        """
        coordinates = normalize(self.coordinates(u))
        return float(coordinates @ self.matrix @ coordinates)


def _check_basis(basis: obt.RealData, velocity: obt.Vector, tolerance: float) -> None:
    gram = basis @ basis.T
    if np.max(np.abs(gram - np.eye(len(basis)))) > tolerance:
        raise ob.BasisMismatchError("Front basis is not orthonormal.")
    if np.max(np.abs(basis @ velocity)) > tolerance:
        raise ob.BasisMismatchError("Front basis is not orthogonal to the velocity.")


def initial_front(
    velocity: obt.Vector, curvature: float, basis: obt.RealData | None = None
) -> FrontOperator:
    """
    Creates a front with the same curvature in every direction.

    With a large curvature, this approximates the front of a point source.

    Parameters
    ----------
    velocity : obt.Vector
        The unit direction of motion.
    curvature : float
        The principal curvature, non-negative.
    basis : obt.RealData | None, default=None
        Orthonormal basis of the front plane; computed from the velocity if not given.
    """
    if curvature < 0:
        raise ob.InvalidValueError(
            f"Initial front curvature must not be negative: {curvature}."
        )
    velocity = normalize(np.asarray(velocity, dtype=float))
    if basis is None:
        basis = tangent_basis(velocity)
    return FrontOperator(curvature * np.eye(len(velocity) - 1), basis, velocity)


def theta_operator(
    curvatures: obt.RealData,
    frame: obt.RealData,
    normal: obt.Vector,
    v_out: obt.Vector,
    basis: obt.RealData | None = None,
    tolerances: ob.Tolerances | None = None,
) -> FrontOperator:
    """
    Returns the curvature increment Θ = ⟨n, v⟩ V*KV of a reflection.

    Here K is the second fundamental form of the obstacle at the reflection point and
    V maps the plane orthogonal to the outgoing velocity along v onto the tangent plane
    of the obstacle. After the reflection, the front operator becomes 𝓑⁺ = 𝓑⁻ + 2Θ.

    Parameters
    ----------
    curvatures : obt.RealData
        The D-1 principal curvatures of the obstacle at the reflection point.
    frame : obt.RealData
        The principal directions as rows, shape (D-1, D).
    normal : obt.Vector
        The outward unit normal n.
    v_out : obt.Vector
        The outgoing unit velocity v.
    basis : obt.RealData | None, default=None
        The basis of the outgoing front plane for the result; computed if not given.
    tolerances : ob.Tolerances | None, default=None
        Uses the grazing threshold.

    Raises
    ------
    ob.GrazingCollisionError
        If cos φ = ⟨n, v⟩ is below the grazing threshold.

    Notes
    -----
    In 2D, Θ reduces to κ / cos φ.
    """
    tolerances = tolerances or ob.Tolerances()
    normal = np.asarray(normal, dtype=float)
    v_out = np.asarray(v_out, dtype=float)

    cos_phi = float(normal @ v_out)
    if cos_phi < tolerances.grazing:
        raise ob.GrazingCollisionError(f"Collision is grazing, cos φ = {cos_phi:.3e}.")

    if basis is None:
        basis = tangent_basis(v_out)

    frame = np.atleast_2d(frame)
    second_form = frame.T @ np.diag(np.asarray(curvatures, dtype=float)) @ frame
    projection = np.eye(len(v_out)) - np.outer(v_out, normal) / cos_phi
    mapped = projection @ basis.T

    theta = cos_phi * mapped.T @ second_form @ mapped
    return FrontOperator((theta + theta.T) / 2, basis, v_out)


def propagate_front(front: FrontOperator, t: float) -> FrontOperator:
    """
    Moves a front freely for time t.

    The operator becomes 𝓑 (I + t𝓑)⁻¹, so every principal curvature λ turns into λ / (1 + tλ).

    Raises
    ------
    ob.InvalidValueError
        If t is negative or the front is not convex.
    """
    if t < 0:
        raise ob.InvalidValueError(f"Flight time must not be negative, but is {t}.")
    if front.eigenvalues[0] < -1e-12:
        raise ob.InvalidValueError("Only convex fronts can be propagated.")

    size = len(front.matrix)
    matrix = np.linalg.solve(np.eye(size) + t * front.matrix, front.matrix)
    return FrontOperator((matrix + matrix.T) / 2, front.basis, front.velocity)


def transport_front(
    front: FrontOperator, normal: obt.Vector, v_out: obt.Vector
) -> FrontOperator:
    """
    Carries a front across a reflection without adding the curvature increment.

    The basis vectors are mirrored with the reflection, which maps the incoming front
    plane isometrically onto the outgoing one, and re-orthonormalized against v⁺ to
    remove rounding drift. The operator is re-expressed in the new basis.
    """
    v_out = normalize(np.asarray(v_out, dtype=float))
    mirrored = np.array([reflect(e, normal) for e in front.basis])

    in_plane = mirrored - np.outer(mirrored @ v_out, v_out)
    q, _ = np.linalg.qr(in_plane.T)
    basis = q.T
    # keep the orientation of the mirrored vectors
    signs = np.sign(np.sum(basis * in_plane, axis=1))
    signs[signs == 0] = 1
    basis *= signs[:, np.newaxis]

    change = basis @ mirrored.T
    matrix = change @ front.matrix @ change.T
    return FrontOperator((matrix + matrix.T) / 2, basis, v_out)


def reflect_front(
    front: FrontOperator, theta: FrontOperator, tolerances: ob.Tolerances | None = None
) -> FrontOperator:
    """
    Applies the reflection law for fronts, 𝓑⁺ = 𝓑⁻ + 2Θ.

    Both operators must describe the same outgoing front plane. If their bases differ,
    the incoming operator is rotated into the basis of Θ first.

    Parameters
    ----------
    front : FrontOperator
        The incoming front 𝓑⁻, already carried to the outgoing plane,
        see :py:func:`transport_front`.
    theta : FrontOperator
        The increment Θ from :py:func:`theta_operator`.
    tolerances : ob.Tolerances | None, default=None
        Uses the basis tolerance.

    Raises
    ------
    ob.BasisMismatchError
        If the two bases do not span the same plane.
    """
    tolerances = tolerances or ob.Tolerances()
    change = theta.basis @ front.basis.T
    if np.max(np.abs(change.T @ change - np.eye(len(change)))) > tolerances.basis:
        raise ob.BasisMismatchError("Front and Θ operator live on different planes.")

    matrix = change @ front.matrix @ change.T + 2 * theta.matrix
    return FrontOperator((matrix + matrix.T) / 2, theta.basis, theta.velocity)


def delta_factor(front: FrontOperator, u: obt.Vector, d: float) -> float:
    """
    Returns the contraction factor δ = 1 / (1 + dℓ) of one flight.

    The expansion rate ℓ is defined by (1 + dℓ)² = ‖û + d𝓑û‖², so that δ is the
    inverse growth of an infinitesimal separation along û over the flight length d.
    In 2D this is exactly 1 / (1 + dk).

    Parameters
    ----------
    front : FrontOperator
        The front 𝓑_j right after a reflection.
    u : obt.Vector
        A unit tangent vector of the front, ambient or in basis coordinates.
    d : float
        The flight length, positive.

    Raises
    ------
    ob.InvalidValueError
        If d is not positive.
    """
    if d <= 0:
        raise ob.InvalidValueError(f"Flight length must be positive, but is {d}.")
    coordinates = normalize(front.coordinates(u))
    return float(1 / np.linalg.norm(coordinates + d * front.matrix @ coordinates))


def expansion_rate(front: FrontOperator, u: obt.Vector, d: float) -> float:
    """
    Returns ℓ with δ = 1 / (1 + dℓ), see :py:func:`delta_factor`.
    """
    return (1 / delta_factor(front, u, d) - 1) / d

