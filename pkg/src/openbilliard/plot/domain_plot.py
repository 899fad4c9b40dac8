import os

import matplotlib.patches
import matplotlib.pyplot as plt
import numpy as np

from openbilliard.constants import DomainD
from openbilliard.dimension import g

from ._utilities import save_svg


class DomainPlot:
    """
    Plot of the domains 𝔻 in the (γ, θ) plane over contour lines of g.

    The natural domain is drawn as an outlined rectangle, the rectangles of the
    adjusted domain are shaded on top of it.

    Parameters
    ----------
    natural : DomainD
        The natural domain.
    adjusted : DomainD | None, default=None
        The adjusted domain.
    resolution : int, default=200
        The number of grid points per axis on which g is sampled.

    Attributes
    ----------
    figure : matplotlib.pyplot.Figure
        The figure that we plot on.
    xlim, ylim : tuple[float, float]
        The γ and θ ranges, 5% wider than the natural rectangle.
    contours : int
        The number of contour levels of g.
    """

    def __init__(
        self, natural: DomainD, adjusted: DomainD | None = None, resolution: int = 200
    ) -> None:
        self._natural = natural
        self._adjusted = adjusted
        self._resolution = resolution

        box = natural.bounding_box()
        gamma_range = box.gamma_hi - box.gamma_lo
        theta_range = box.theta_hi - box.theta_lo
        self.xlim = (
            max(0.0, box.gamma_lo - 0.05 * gamma_range),
            box.gamma_hi + 0.05 * gamma_range,
        )
        self.ylim = (
            max(1e-3 * box.theta_lo, box.theta_lo - 0.05 * theta_range),
            box.theta_hi + 0.05 * theta_range,
        )
        self.contours = 15

        self.figure, self._axes = plt.subplots()

    def plot(self) -> plt.Axes:
        """
        Draws the contours and the domains.

        Returns
        -------
        plt.Axes
            The axes for further manipulation.
        """
        axes = self._axes
        axes.clear()
        axes.set_xlim(*self.xlim)
        axes.set_ylim(*self.ylim)
        axes.set_xlabel("γ")
        axes.set_ylabel("θ")

        gamma = np.linspace(*self.xlim, self._resolution)
        theta = np.linspace(*self.ylim, self._resolution)
        values = g(gamma[np.newaxis, :], theta[:, np.newaxis])
        contour = axes.contour(
            gamma, theta, values, self.contours, colors="0.6", linewidths=0.8
        )
        axes.clabel(contour, fontsize=6)

        for rectangle in self._natural:
            axes.add_patch(_patch(rectangle, fill=False, edgecolor="k", linewidth=1.5))

        if self._adjusted is not None:
            for rectangle in self._adjusted:
                axes.add_patch(
                    _patch(
                        rectangle, fill=True, facecolor="tab:blue", alpha=0.3, edgecolor="b"
                    )
                )

        return axes

    def save(self, path: str | os.PathLike) -> None:
        """Writes the figure as deterministic SVG."""
        save_svg(self.figure, path)


def _patch(rectangle, **kwargs) -> matplotlib.patches.Rectangle:
    return matplotlib.patches.Rectangle(
        (rectangle.gamma_lo, rectangle.theta_lo),
        rectangle.gamma_hi - rectangle.gamma_lo,
        rectangle.theta_hi - rectangle.theta_lo,
        **kwargs,
    )
