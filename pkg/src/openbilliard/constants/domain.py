from dataclasses import dataclass

import openbilliard as ob

from .report import ConstantsReport


@dataclass(frozen=True)
class Rectangle:
    """
    A rectangle [γ_lo, γ_hi] x [θ_lo, θ_hi] of curvature and flight-length values.

    Attributes
    ----------
    gamma_lo, gamma_hi : float
        The bounds on the curvature increment γ.
    theta_lo, theta_hi : float
        The bounds on the flight length θ.
    tag : tuple[int, int] | None
        The ordered obstacle pair the rectangle belongs to, None for the natural domain.
    """

    gamma_lo: float
    gamma_hi: float
    theta_lo: float
    theta_hi: float
    tag: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if not (0 < self.gamma_lo <= self.gamma_hi and 0 < self.theta_lo <= self.theta_hi):
            raise ob.InvalidValueError(
                f"Invalid rectangle [{self.gamma_lo}, {self.gamma_hi}] x "
                f"[{self.theta_lo}, {self.theta_hi}]."
            )

    def contains(self, other: "Rectangle", tolerance: float = 1e-12) -> bool:
        return (
            self.gamma_lo <= other.gamma_lo + tolerance
            and other.gamma_hi <= self.gamma_hi + tolerance
            and self.theta_lo <= other.theta_lo + tolerance
            and other.theta_hi <= self.theta_hi + tolerance
        )

    def corners(self) -> tuple[tuple[float, float], ...]:
        return (
            (self.gamma_lo, self.theta_lo),
            (self.gamma_lo, self.theta_hi),
            (self.gamma_hi, self.theta_lo),
            (self.gamma_hi, self.theta_hi),
        )


@dataclass(frozen=True)
class DomainD:
    """
    The parameter domain 𝔻, a union of rectangles.

    Attributes
    ----------
    rectangles : tuple[Rectangle, ...]
        A single untagged rectangle in natural mode, one per ordered pair in adjusted mode.
    iota : int
        The exponent ι of the cosine in the lower curvature bound, 0 in 2D and 1 in 3D.
    mode : str
        The mode of the constants the domain was built from.
    """

    rectangles: tuple[Rectangle, ...]
    iota: int
    mode: str

    def __iter__(self):
        return iter(self.rectangles)

    def __len__(self) -> int:
        return len(self.rectangles)

    def bounding_box(self) -> Rectangle:
        return Rectangle(
            min(r.gamma_lo for r in self.rectangles),
            max(r.gamma_hi for r in self.rectangles),
            min(r.theta_lo for r in self.rectangles),
            max(r.theta_hi for r in self.rectangles),
        )


def build_domain(report: ConstantsReport, dimension: int) -> DomainD:
    """
    Assembles the domain 𝔻 of curvature and flight-length values.

    In natural mode, this is the single rectangle
    [κ⁻ cos^ι φ⁺, κ⁺ / cos φ⁺] x [d_min, d_max]. In adjusted mode, every ordered pair (i, j)
    contributes [κ⁻ cos^ι φ⁺_ij, κ⁺ / cos φ⁺_ij] x [d⁻_ij, d⁺_ij], where the curvature bounds
    are those of K_i or of K_j, following ``report.options.curvature_index``.

    Parameters
    ----------
    report : ConstantsReport
        The constants.
    dimension : int
        The ambient dimension, 2 or 3.

    Examples
    --------
    In 2D, the lower curvature bound carries no cosine factor:

    >>> import openbilliard as ob
    >>> billiard = ob.special.equilateral_disks(3, radius=1.0, side=10.0)
    >>> report = ob.constants.compute_constants(billiard, "natural")
    >>> float(ob.constants.build_domain(report, 2).rectangles[0].gamma_lo)
    1.0
    """
    if dimension not in (2, 3):
        raise ob.InvalidValueError(f"Dimension must be 2 or 3, got {dimension}.")
    iota = 0 if dimension == 2 else 1

    if report.mode == "natural":
        cos_phi = report.cos_phi_plus
        rectangle = Rectangle(
            report.kappa_minus * cos_phi**iota,
            report.kappa_plus / cos_phi,
            report.d_min,
            report.d_max,
        )
        return DomainD((rectangle,), iota, report.mode)

    rectangles = []
    for pair in report.pairs:
        index = pair.i if report.options.curvature_index == "struck" else pair.j
        kappa_minus, kappa_plus = report.curvatures[index]
        rectangles.append(
            Rectangle(
                kappa_minus * pair.cos_phi_bound**iota,
                kappa_plus / pair.cos_phi_bound,
                pair.d_minus,
                pair.d_plus,
                (pair.i, pair.j),
            )
        )
    return DomainD(tuple(rectangles), iota, report.mode)
