"""
Ready-made billiard tables.

These encompass the standard three-disk example, symmetric configurations, and random
tables for property tests.
"""

__all__ = [
    "equilateral_disks",
    "isosceles_three_disks",
    "random_disk_billiard",
    "tetrahedral_balls",
]

from .billiards import (
    equilateral_disks,
    isosceles_three_disks,
    random_disk_billiard,
    tetrahedral_balls,
)
