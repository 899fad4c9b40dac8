"""
Several aliases and definitions for type checking.
"""

__all__ = ["RealData", "Point", "Vector", "IndexPair"]

from .data_types import RealData, Point, Vector, IndexPair
