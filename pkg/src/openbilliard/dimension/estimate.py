import logging
from dataclasses import dataclass

import openbilliard as ob
from openbilliard.constants import ConstantsReport, DomainD, build_domain, compute_constants
from openbilliard.geometry import Billiard

from .bounds import (
    ConstantChain,
    DimensionBounds,
    Variant,
    constant_chain,
    dimension_bounds,
    holder_exponent,
    pinching_check,
)
from .fixed_point import GExtrema, g_extrema

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DimensionReport:
    """
    The complete result of a dimension estimate for one billiard and mode.

    Attributes
    ----------
    constants : ConstantsReport
        The billiard constants.
    domain : DomainD
        The domain 𝔻 built from them.
    extrema : GExtrema
        The extrema of g over 𝔻.
    chain : ConstantChain
        The derived contraction constants.
    alpha_raw : float
        The Hölder exponent before clamping.
    alpha_clamped : bool
        Whether the exponent was clamped to 1.
    pinching_lambda0_mu0 : bool
        The pinching check evaluated on (λ₀, μ₀) instead of (λ₁, μ₁).
    bounds : dict[str, DimensionBounds]
        The estimates by variant.
    """

    constants: ConstantsReport
    domain: DomainD
    extrema: GExtrema
    chain: ConstantChain
    alpha_raw: float
    alpha_clamped: bool
    pinching_lambda0_mu0: bool
    bounds: dict[Variant, DimensionBounds]

    @property
    def mode(self) -> str:
        return self.constants.mode

    @property
    def interval(self) -> tuple[float, float]:
        """The two-sided estimate, the headline result."""
        best = self.bounds["two_sided_eq1"]
        return best.lower, best.upper

    @property
    def pinching_satisfied(self) -> bool:
        return self.bounds["two_sided_eq1"].pinching_satisfied

    def as_dict(self) -> dict:
        return {
            "mode": self.mode,
            "constants": self.constants.as_dict(),
            "g_min": self.extrema.g_min,
            "g_max": self.extrema.g_max,
            "g_argmin": list(self.extrema.argmin[:2]),
            "g_argmax": list(self.extrema.argmax[:2]),
            "chain": self.chain.as_dict(),
            "alpha_raw": self.alpha_raw,
            "alpha_clamped": self.alpha_clamped,
            "pinching": self.pinching_satisfied,
            "pinching_lambda0_mu0": self.pinching_lambda0_mu0,
            "bounds": {variant: bound.as_dict() for variant, bound in self.bounds.items()},
        }


def estimate_dimension(
    billiard: Billiard,
    mode: str = "natural",
    tolerances: ob.Tolerances | None = None,
    options: ob.EstimateOptions | None = None,
) -> DimensionReport:
    """
    Runs the full pipeline from the billiard geometry to the dimension bounds.

    The steps are: compute the constants, build the domain 𝔻, find the extrema of g,
    derive λ₁, μ₁ and the auxiliary constants, and evaluate every estimate.

    Parameters
    ----------
    billiard : Billiard
        The billiard table.
    mode : {"natural", "adjusted"}, default="natural"
        Whether to restrict the constants to the hull H.
    tolerances : ob.Tolerances | None, default=None
        Solver tolerances.
    options : ob.EstimateOptions | None, default=None
        Modelling switches.

    Raises
    ------
    ob.EclipseViolationError
        If the billiard violates the no-eclipse condition.
    ob.DegenerateHullError
        In adjusted mode, if the hull H is degenerate.
    """
    constants = compute_constants(billiard, mode, tolerances, options)
    domain = build_domain(constants, billiard.dimension)
    extrema = g_extrema(domain)
    chain = constant_chain(extrema, constants)

    d_min, d_max = constants.d_min, constants.d_max
    alpha_raw = holder_exponent(d_min, d_max, chain.lambda1, chain.mu1)

    report = DimensionReport(
        constants=constants,
        domain=domain,
        extrema=extrema,
        chain=chain,
        alpha_raw=alpha_raw,
        alpha_clamped=alpha_raw > 1,
        pinching_lambda0_mu0=pinching_check(chain.lambda0, chain.mu0, d_min, d_max),
        bounds=dimension_bounds(billiard.size, chain, d_min, d_max),
    )
    _logger.info(
        "%s estimate: g in [%.6g, %.6g], dimension in [%.6g, %.6g]",
        mode,
        extrema.g_min,
        extrema.g_max,
        *report.interval,
    )
    return report

