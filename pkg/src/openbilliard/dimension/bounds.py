import logging
import math
from dataclasses import dataclass
from typing import Literal

import openbilliard as ob
from openbilliard.constants import ConstantsReport

from .fixed_point import GExtrema

_logger = logging.getLogger(__name__)

Variant = Literal["two_sided_eq1", "alpha_scaled_eq2", "general_eq7"]


@dataclass(frozen=True)
class ConstantChain:
    """
    The contraction and expansion constants derived from the extrema of g.

    Attributes
    ----------
    lambda1, mu1 : float
        λ₁ = 1 / (1 + d_max g_max) and μ₁ = 1 / (1 + d_min g_min).
    lambda0, mu0 : float
        The cruder constants from the curvature and angle bounds alone,
        λ₀⁻¹ = 1 + d_max (1/d_min + 2κ⁺/cos φ⁺) and μ₀⁻¹ = 1 + 2 d_min κ⁻ cos φ⁺.
    delta_minus : float
        δ⁻ = 1 / (1 + d_max k₀⁺), the smallest contraction of an initial front.
    """

    lambda1: float
    mu1: float
    lambda0: float
    mu0: float
    delta_minus: float

    def __post_init__(self) -> None:
        for name in ("lambda1", "mu1", "lambda0", "mu0", "delta_minus"):
            value = getattr(self, name)
            if not 0 < value < 1:
                raise ob.InvalidValueError(f"{name} must lie in (0, 1), but is {value}.")

    def as_dict(self) -> dict[str, float]:
        return {
            "lambda1": self.lambda1,
            "mu1": self.mu1,
            "lambda0": self.lambda0,
            "mu0": self.mu0,
            "delta_minus": self.delta_minus,
        }


def constant_chain(
    extrema: GExtrema, report: ConstantsReport, k0_plus: float | None = None
) -> ConstantChain:
    """
    Computes λ₁, μ₁, λ₀, μ₀ and δ⁻ from the g extrema and the billiard constants.

    Parameters
    ----------
    extrema : GExtrema
        The extrema of g over 𝔻.
    report : ConstantsReport
        The constants; the global d_min, d_max, κ± and φ⁺ are used.
    k0_plus : float | None, default=None
        The upper curvature bound of initial fronts; defaults to the report's options.
    """
    k0_plus = report.options.k0_plus if k0_plus is None else k0_plus
    if k0_plus <= 0:
        raise ob.InvalidValueError(f"k0_plus must be positive, but is {k0_plus}.")

    d_min, d_max, cos_phi = report.d_min, report.d_max, report.cos_phi_plus
    return ConstantChain(
        lambda1=1 / (1 + d_max * extrema.g_max),
        mu1=1 / (1 + d_min * extrema.g_min),
        lambda0=1 / (1 + d_max * (1 / d_min + 2 * report.kappa_plus / cos_phi)),
        mu0=1 / (1 + 2 * d_min * report.kappa_minus * cos_phi),
        delta_minus=1 / (1 + d_max * k0_plus),
    )


def _check_contractions(lambda1: float, mu1: float) -> None:
    if not 0 < lambda1 <= mu1 < 1:
        raise ob.InvalidValueError(f"Need 0 < λ₁ <= μ₁ < 1, got λ₁={lambda1}, μ₁={mu1}.")


def _check_size(u: int) -> None:
    if u < 3:
        raise ob.InvalidValueError(f"Need at least three obstacles, got {u}.")


def dimension_bounds_eq1(u: int, lambda1: float, mu1: float) -> tuple[float, float]:
    """
    The two-sided estimate -2 ln(u-1) / ln λ₁ <= dim <= -2 ln(u-1) / ln μ₁.

    Raises
    ------
    ob.InvalidValueError
        If u < 3 or the constants are not ordered inside (0, 1).
    """
    _check_size(u)
    _check_contractions(lambda1, mu1)
    entropy = 2 * math.log(u - 1)
    return -entropy / math.log(lambda1), -entropy / math.log(mu1)


def holder_exponent(d_min: float, d_max: float, lambda1: float, mu1: float) -> float:
    """
    The unclamped Hölder exponent α = 2 d_min ln μ₁ / (d_max ln λ₁) of the holonomy maps.
    """
    _check_contractions(lambda1, mu1)
    if not 0 < d_min <= d_max:
        raise ob.InvalidValueError(f"Need 0 < d_min <= d_max, got {d_min} and {d_max}.")
    return 2 * d_min * math.log(mu1) / (d_max * math.log(lambda1))


def holder_alpha(
    d_min: float, d_max: float, lambda1: float, mu1: float
) -> tuple[float, bool]:
    """
    The Hölder exponent of :py:func:`holder_exponent`, clamped to 1.

    Returns
    -------
    tuple[float, bool]
        The exponent, clamped to 1, and whether clamping happened.
    """
    alpha = holder_exponent(d_min, d_max, lambda1, mu1)
    if alpha > 1:
        _logger.warning("Hölder exponent %.4g exceeds 1, using 1", alpha)
        return 1.0, True
    return alpha, False


def dimension_bounds_eq2(
    u: int, lambda1: float, mu1: float, alpha: float
) -> tuple[float, float]:
    """
    The estimate with Hölder exponent, α times the lower and 1/α times the upper eq1 bound.
    """
    if not 0 < alpha <= 1:
        raise ob.InvalidValueError(f"α must lie in (0, 1], but is {alpha}.")
    lower, upper = dimension_bounds_eq1(u, lambda1, mu1)
    return alpha * lower, upper / alpha


def dimension_bounds_eq7(
    u: int, lambda1: float, mu1: float, d_min: float, d_max: float
) -> tuple[float, float]:
    """
    The general estimate without clamping the bunching constant.

    The bounds are -4 d_min ln μ₁ ln(u-1) / (d_max (ln λ₁)²) and
    -d_max ln λ₁ ln(u-1) / (d_min (ln μ₁)²). For α <= 1 they agree with eq2.
    """
    _check_size(u)
    _check_contractions(lambda1, mu1)
    log_lambda, log_mu, entropy = math.log(lambda1), math.log(mu1), math.log(u - 1)
    lower = -4 * d_min * log_mu * entropy / (d_max * log_lambda**2)
    upper = -d_max * log_lambda * entropy / (d_min * log_mu**2)
    return lower, upper


def pinching_check(lambda1: float, mu1: float, d_min: float, d_max: float) -> bool:
    """
    Whether λ₁^d_max < μ₁^(2 d_min), evaluated in logarithms.

    The inequality is strict, so equality counts as a failure.
    """
    return d_max * math.log(lambda1) < 2 * d_min * math.log(mu1)


@dataclass(frozen=True)
class DimensionBounds:
    """
    One pair of Hausdorff dimension bounds together with the constants behind it.

    Attributes
    ----------
    variant : {"two_sided_eq1", "alpha_scaled_eq2", "general_eq7"}
        Which estimate produced the bounds.
    lower, upper : float
        The bounds.
    lambda1, mu1, lambda0, mu0, delta_minus : float
        The constant chain.
    alpha : float
        The Hölder exponent, at most 1.
    pinching_satisfied : bool
        The outcome of the pinching check on (λ₁, μ₁).
    """

    variant: Variant
    lower: float
    upper: float
    lambda1: float
    mu1: float
    alpha: float
    pinching_satisfied: bool
    lambda0: float
    mu0: float
    delta_minus: float

    def __post_init__(self) -> None:
        if not 0 <= self.lower <= self.upper:
            raise ob.InvalidValueError(
                f"Bounds must satisfy 0 <= lower <= upper, got {self.lower}, {self.upper}."
            )

    def as_dict(self) -> dict:
        return {
            "variant": self.variant,
            "lower": self.lower,
            "upper": self.upper,
            "alpha": self.alpha,
            "pinching_satisfied": self.pinching_satisfied,
        }


def dimension_bounds(
    u: int, chain: ConstantChain, d_min: float, d_max: float
) -> dict[Variant, DimensionBounds]:
    """
    Evaluates the estimates for the same constants.

    The general estimate is only included if the Hölder exponent needs no clamping; for
    an exponent above 1 its lower bound may exceed the upper one.
    """
    alpha, clamped = holder_alpha(d_min, d_max, chain.lambda1, chain.mu1)
    pinching = pinching_check(chain.lambda1, chain.mu1, d_min, d_max)
    values = {
        "two_sided_eq1": dimension_bounds_eq1(u, chain.lambda1, chain.mu1),
        "alpha_scaled_eq2": dimension_bounds_eq2(u, chain.lambda1, chain.mu1, alpha),
    }
    if not clamped:
        values["general_eq7"] = dimension_bounds_eq7(u, chain.lambda1, chain.mu1, d_min, d_max)

    return {
        variant: DimensionBounds(
            variant,
            lower,
            upper,
            chain.lambda1,
            chain.mu1,
            alpha,
            pinching,
            chain.lambda0,
            chain.mu0,
            chain.delta_minus,
        )
        for variant, (lower, upper) in values.items()
    }
