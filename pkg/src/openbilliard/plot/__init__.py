"""
Matplotlib figures of billiard tables and of the (γ, θ) domains.

Figures are written as SVG whose bytes only depend on the plotted content.
"""

__all__ = ["BilliardPlot", "DomainPlot", "save_svg"]

from ._utilities import save_svg
from .billiard_plot import BilliardPlot
from .domain_plot import DomainPlot
