import os

import matplotlib as mpl
import matplotlib.pyplot as plt

# 1 length unit = 40 px, and SVG has 72 px per inch
PIXELS_PER_UNIT = 40
_SVG_DPI = 72


def figure_size(width: float, height: float) -> tuple[float, float]:
    """Figure size in inches for a drawing region given in length units."""
    return width * PIXELS_PER_UNIT / _SVG_DPI, height * PIXELS_PER_UNIT / _SVG_DPI


def save_svg(figure: plt.Figure, path: str | os.PathLike) -> None:
    """
    Writes a figure as SVG such that identical figures give byte-identical files.

    The creation date is omitted and the element ids are derived from a fixed salt.
    """
    with mpl.rc_context({"svg.hashsalt": "openbilliard", "svg.fonttype": "path"}):
        figure.savefig(path, format="svg", metadata={"Date": None})
