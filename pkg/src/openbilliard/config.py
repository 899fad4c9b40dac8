"""
Numerical tolerances, iteration budgets and modelling switches.

All numerical knobs of the package live in a single immutable record, so that a report
can state exactly which settings produced its numbers.
"""

import dataclasses
import os
from dataclasses import dataclass
from typing import Any, Literal, Self

import openbilliard as ob

__all__ = ["Tolerances", "EstimateOptions", "PROFILES", "thread_count"]


@dataclass(frozen=True)
class Tolerances:
    """
    Tolerances and iteration budgets of all solvers.

    Attributes
    ----------
    projection : float, default=1e-12
        Maximum residual of the implicit surface equation after a boundary projection.
    boundary : float, default=1e-9
        Residual up to which a point counts as lying on an obstacle boundary.
    hull : float, default=1e-9
        Signed distance up to which a point counts as lying inside a convex hull.
    closest_pair : float, default=1e-12
        Point movement below which the alternating projection has converged.
    closest_pair_iterations : int, default=100000
        Iteration budget of the alternating projection.
    orbit : float, default=1e-12
        Maximum point movement per sweep below which the orbit finder has converged.
    orbit_sweeps : int, default=10000
        Sweep budget of the orbit finder.
    orbit_residual : float, default=1e-8
        Largest reflection-law violation accepted for a converged periodic orbit.
    tangency : float, default=1e-10
        Normalized discriminant below which a ray counts as tangent to an obstacle.
    grazing : float, default=1e-8
        Smallest admissible cosine of a collision angle in the front curvature update.
    basis : float, default=1e-10
        Maximum deviation from orthonormality of front bases.
    boundary_samples_2d, boundary_samples_3d : int, default=10000, 100000
        Number of boundary samples for restricted curvature extrema.
    direction_samples : int, default=10000
        Number of unit directions sampled before refining support-function optimizations.
    """

    projection: float = 1e-12
    boundary: float = 1e-9
    hull: float = 1e-9
    closest_pair: float = 1e-12
    closest_pair_iterations: int = 100_000
    orbit: float = 1e-12
    orbit_sweeps: int = 10_000
    orbit_residual: float = 1e-8
    tangency: float = 1e-10
    grazing: float = 1e-8
    basis: float = 1e-10
    boundary_samples_2d: int = 10_000
    boundary_samples_3d: int = 100_000
    direction_samples: int = 10_000

    def __post_init__(self) -> None:
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if value <= 0:
                raise ob.InvalidValueError(
                    f"Tolerance '{field.name}' must be positive, but is {value}."
                )

    @classmethod
    def from_profile(cls, name: str) -> Self:
        """
        Returns the named tolerance profile.

        Raises
        ------
        ob.InvalidValueError
            If there is no profile of that name.
        """
        if name not in PROFILES:
            raise ob.InvalidValueError(
                f"Unknown tolerance profile '{name}', expected one of {sorted(PROFILES)}."
            )
        return PROFILES[name]

    def replace(self, **changes: Any) -> Self:
        """
        Returns a copy with some fields overridden.

        Raises
        ------
        ob.InvalidValueError
            If a field name is unknown or a value is not positive.
        """
        names = {field.name for field in dataclasses.fields(self)}
        unknown = set(changes) - names
        if unknown:
            raise ob.InvalidValueError(f"Unknown tolerance fields {sorted(unknown)}.")
        return dataclasses.replace(self, **changes)

    def as_dict(self) -> dict[str, float | int]:
        return dataclasses.asdict(self)


PROFILES: dict[str, Tolerances] = {
    "default": Tolerances(),
    "fast": Tolerances(
        closest_pair=1e-10,
        orbit=1e-10,
        orbit_sweeps=2_000,
        boundary_samples_2d=2_000,
        boundary_samples_3d=10_000,
        direction_samples=2_000,
    ),
    "strict": Tolerances(
        projection=1e-13,
        closest_pair=1e-13,
        closest_pair_iterations=1_000_000,
        orbit=1e-13,
        orbit_sweeps=100_000,
        boundary_samples_2d=100_000,
        boundary_samples_3d=400_000,
        direction_samples=50_000,
    ),
}
"""
The named tolerance profiles that can be selected on the command line.
"""


@dataclass(frozen=True)
class EstimateOptions:
    """
    Modelling switches of the constants and dimension pipeline.

    Attributes
    ----------
    natural_d_plus : {"hull", "boundary"}, default="hull"
        How the natural-mode maximum flight length d⁺_ij is obtained. "hull" takes the
        maximum distance between the closest-pair points p_ik and p_jl, "boundary" the
        maximum distance between the two obstacle boundaries.
    angle_length : {"pair", "global"}, default="pair"
        The flight length L in the per-pair angle bound cos φ_ij ≥ b⁻_ij / L,
        either the pair's own d⁺_ij or the global d_max.
    curvature_index : {"struck", "partner"}, default="struck"
        Whether the rectangle of the ordered pair (i, j) uses the curvature of K_i or K_j.
    k0_plus : float, default=1e6
        Upper bound on the curvature of initial fronts.
    """

    natural_d_plus: Literal["hull", "boundary"] = "hull"
    angle_length: Literal["pair", "global"] = "pair"
    curvature_index: Literal["struck", "partner"] = "struck"
    k0_plus: float = 1e6

    def __post_init__(self) -> None:
        _check_choice("natural_d_plus", self.natural_d_plus, ("hull", "boundary"))
        _check_choice("angle_length", self.angle_length, ("pair", "global"))
        _check_choice("curvature_index", self.curvature_index, ("struck", "partner"))
        if self.k0_plus <= 0:
            raise ob.InvalidValueError(f"k0_plus must be positive, but is {self.k0_plus}.")

    def as_dict(self) -> dict[str, Any]:
        return dataclasses.asdict(self)


def _check_choice(name: str, value: str, choices: tuple[str, ...]) -> None:
    if value not in choices:
        raise ob.InvalidValueError(
            f"Option '{name}' must be one of {choices}, but is '{value}'."
        )


def thread_count() -> int | None:
    """
    Returns the worker thread override from the environment, if any.

    The variable ``OPENBILLIARD_THREADS`` is the only environment configuration we read.
    Unset or empty means "let the executor decide".

    Raises
    ------
    ob.InvalidValueError
        If the variable is set but not a positive integer.
    """
    raw = os.environ.get("OPENBILLIARD_THREADS", "").strip()
    if not raw:
        return None

    try:
        value = int(raw)
    except ValueError:
        raise ob.InvalidValueError(f"OPENBILLIARD_THREADS must be an integer, got '{raw}'.")

    if value < 1:
        raise ob.InvalidValueError(f"OPENBILLIARD_THREADS must be positive, got {value}.")
    return value
