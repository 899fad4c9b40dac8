from dataclasses import dataclass

import numpy as np

import openbilliard as ob
import openbilliard.typing as obt
from openbilliard.constants import DomainD


def g(gamma: obt.RealData | float, theta: obt.RealData | float) -> obt.RealData | float:
    """
    The positive fixed point g(γ, θ) = γ + sqrt(γ² + 2γ/θ) of the curvature map.

    g is non-decreasing in γ and strictly decreasing in θ for γ > 0. The function accepts
    scalars or broadcastable arrays.

    Raises
    ------
    ob.InvalidValueError
        If γ is negative or θ is not positive.

    Examples
    --------
    >>> round(g(1.0, 2.0), 12) == round(1 + 2**0.5, 12)
    True
    """
    gamma_array = np.asarray(gamma, dtype=float)
    theta_array = np.asarray(theta, dtype=float)
    if np.any(gamma_array < 0) or np.any(theta_array <= 0):
        raise ob.InvalidValueError(f"Need γ >= 0 and θ > 0, got γ={gamma}, θ={theta}.")

    result = gamma_array + np.sqrt(gamma_array**2 + 2 * gamma_array / theta_array)
    return float(result) if result.ndim == 0 else result


def curvature_map(x: float, gamma: float, theta: float) -> float:
    """
    One step f(x) = x / (1 + θx) + 2γ of the front curvature recursion.

    A front of curvature x flies a distance θ and is reflected with curvature increment γ.
    """
    return x / (1 + theta * x) + 2 * gamma


def iterate_curvature_map(
    x0: float, gamma: float, theta: float, n: int
) -> obt.RealData:
    """
    Returns x0, f(x0), ..., fⁿ(x0) for the curvature map f.

    For x0 >= 0 the iterates converge to g(γ, θ), which is the stable fixed point.
    """
    if x0 < 0 or n < 0:
        raise ob.InvalidValueError(f"Need x0 >= 0 and n >= 0, got {x0} and {n}.")
    values = [float(x0)]
    for _ in range(n):
        values.append(curvature_map(values[-1], gamma, theta))
    return np.array(values)


@dataclass(frozen=True)
class GExtrema:
    """
    The extrema of g over the domain 𝔻.

    Attributes
    ----------
    g_min, g_max : float
        The smallest and largest value of g.
    argmin, argmax : tuple[float, float, tuple[int, int] | None]
        The (γ, θ, tag) where the extrema are attained; the tag is the rectangle's pair.
    """

    g_min: float
    g_max: float
    argmin: tuple[float, float, tuple[int, int] | None]
    argmax: tuple[float, float, tuple[int, int] | None]

    def __post_init__(self) -> None:
        if not 0 < self.g_min <= self.g_max:
            raise ob.InvalidValueError(
                f"Invalid extrema g_min={self.g_min}, g_max={self.g_max}."
            )


def g_extrema(domain: DomainD, iota: int | None = None) -> GExtrema:
    """
    Finds the extrema of g over a domain of rectangles.

    By the monotonicity of g, the minimum over a rectangle is attained at (γ_lo, θ_hi) and
    the maximum at (γ_hi, θ_lo), so only two corners per rectangle are evaluated.

    Parameters
    ----------
    domain : DomainD
        The domain 𝔻.
    iota : int | None, default=None
        The cosine exponent ι. The domain already contains it; if given, it must agree.

    Raises
    ------
    ob.InvalidValueError
        If iota does not match the domain.
    """
    if iota is not None and iota != domain.iota:
        raise ob.InvalidValueError(
            f"ι = {iota} does not match the domain's ι = {domain.iota}."
        )

    lows = [(g(r.gamma_lo, r.theta_hi), r.gamma_lo, r.theta_hi, r.tag) for r in domain]
    highs = [(g(r.gamma_hi, r.theta_lo), r.gamma_hi, r.theta_lo, r.tag) for r in domain]

    # ties resolve to the first rectangle, so the result is deterministic
    low = min(lows, key=lambda item: item[0])
    high = max(highs, key=lambda item: item[0])
    return GExtrema(low[0], high[0], low[1:], high[1:])


def fixed_point_residual(gamma: float, theta: float) -> float:
    """|f(g) - g| for the curvature map f with parameters (γ, θ)."""
    value = g(gamma, theta)
    return abs(curvature_map(value, gamma, theta) - value)

