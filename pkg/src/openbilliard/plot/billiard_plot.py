import math
import os

import matplotlib.patches
import matplotlib.pyplot as plt
import numpy as np

import openbilliard as ob
from openbilliard.constants import ConstantsReport
from openbilliard.geometry import Billiard, QuadricObstacle
from openbilliard.orbits import PeriodicOrbit

from ._utilities import figure_size, save_svg


class BilliardPlot:
    """
    Plot of a two-dimensional billiard table with its characteristic distances.

    The obstacles are drawn as outlines. If constants are supplied, the closest-pair
    segments realizing d⁻_ij are drawn as solid lines, the segments realizing d⁺_ij as
    dashed lines, and the hull H is shaded.

    Parameters
    ----------
    billiard : Billiard
        The billiard; it must be two-dimensional.
    constants : ConstantsReport | None, default=None
        The constants whose distances and hull are drawn.
    show_hull : bool, default=True
        Whether to shade the hull H.

    Attributes
    ----------
    figure : matplotlib.pyplot.Figure
        The figure that we plot on.
    xlim, ylim : tuple[float, float]
        The plotted ranges, with a margin of one unit around the obstacles.

    Raises
    ------
    ob.UnsupportedError
        If the billiard is not two-dimensional.
    """

    def __init__(
        self,
        billiard: Billiard,
        constants: ConstantsReport | None = None,
        show_hull: bool = True,
    ) -> None:
        if billiard.dimension != 2:
            raise ob.UnsupportedError(
                f"Only 2D billiards can be plotted, got dimension {billiard.dimension}."
            )
        self._billiard = billiard
        self._constants = constants
        self._show_hull = show_hull

        directions = np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]])
        extents = np.array([obstacle.support(directions) for obstacle in billiard])
        self.xlim = (-extents[:, 1].max() - 1, extents[:, 0].max() + 1)
        self.ylim = (-extents[:, 3].max() - 1, extents[:, 2].max() + 1)

        self.figure, self._axes = plt.subplots(
            figsize=figure_size(self.xlim[1] - self.xlim[0], self.ylim[1] - self.ylim[0])
        )

    def plot(self, orbit: PeriodicOrbit | None = None) -> plt.Axes:
        """
        Draws the billiard, and optionally a periodic orbit as closed polyline.

        Returns
        -------
        plt.Axes
            The axes for further manipulation.
        """
        axes = self._axes
        axes.clear()
        axes.set_aspect("equal")
        axes.set_xlim(*self.xlim)
        axes.set_ylim(*self.ylim)

        hull = self._constants.hull if self._constants is not None else None
        if self._show_hull and hull is not None:
            axes.add_patch(
                matplotlib.patches.Polygon(hull.vertices, closed=True, color="0.85", zorder=0)
            )

        for index, obstacle in enumerate(self._billiard):
            axes.add_patch(_outline(obstacle))
            axes.annotate(str(index + 1), obstacle.center, ha="center", va="center")

        if self._constants is not None:
            self._plot_distances(axes)

        if orbit is not None:
            closed = np.vstack([orbit.points, orbit.points[:1]])
            axes.plot(closed[:, 0], closed[:, 1], "r-", linewidth=1)

        return axes

    def _plot_distances(self, axes: plt.Axes) -> None:
        closest = self._constants.closest_pairs
        size = self._billiard.size
        for i, j in self._billiard.pairs():
            pair = closest[(i, j)]
            segment = np.array([pair.p_ij, pair.p_ji])
            axes.plot(segment[:, 0], segment[:, 1], "k-", linewidth=1)

            starts = [closest.point(i, k) for k in range(size) if k != i]
            ends = [closest.point(j, l) for l in range(size) if l != j]
            segments = ((p, q) for p in starts for q in ends)
            start, end = max(segments, key=lambda s: np.linalg.norm(s[0] - s[1]))
            axes.plot([start[0], end[0]], [start[1], end[1]], "k--", linewidth=1)

    def save(self, path: str | os.PathLike) -> None:
        """Writes the figure as deterministic SVG."""
        save_svg(self.figure, path)


def _outline(obstacle: QuadricObstacle) -> matplotlib.patches.Ellipse:
    a, b = obstacle.semi_axes
    angle = math.degrees(math.atan2(obstacle.frame[1, 0], obstacle.frame[0, 0]))
    return matplotlib.patches.Ellipse(
        obstacle.center, 2 * a, 2 * b, angle=angle, fill=False, edgecolor="b", linewidth=1.5
    )
