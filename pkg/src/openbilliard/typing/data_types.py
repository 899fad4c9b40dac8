from typing import TypeAlias

import numpy as np
import numpy.typing as npt

RealData: TypeAlias = npt.NDArray[np.float64]
"""
Type for real-valued input or output data.
"""

Point: TypeAlias = npt.NDArray[np.float64]
"""
A point in the ambient space, that is, an array of shape (D,) with D = 2 or 3.
"""

Vector: TypeAlias = npt.NDArray[np.float64]
"""
A direction in the ambient space. Most functions expect unit vectors of shape (D,).
"""

IndexPair: TypeAlias = tuple[int, int]
"""
A pair (i, j) of zero-based obstacle indices.
"""
