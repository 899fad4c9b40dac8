from collections.abc import Iterator, Sequence
from typing import Final

import openbilliard as ob

from .obstacle import ObstacleBase


class Billiard:
    """
    An open billiard: finitely many disjoint strictly convex obstacles.

    The particle moves freely in the complement of the obstacles and reflects specularly
    at their boundaries. Obstacles are addressed by their zero-based position in the list.

    Disjointness is checked on construction. The no-eclipse condition is deliberately not
    enforced here, because checking it is a report of its own,
    see :py:func:`openbilliard.geometry.no_eclipse_check`.

    Parameters
    ----------
    obstacles : Sequence[ObstacleBase]
        At least three obstacles of the same ambient dimension.
    tolerances : ob.Tolerances | None, default=None
        Tolerances for the disjointness check.

    Attributes
    ----------
    obstacles : tuple[ObstacleBase, ...], readonly
        The obstacles in their given order.
    dimension : int, readonly
        The ambient dimension D, 2 or 3.
    size : int, readonly
        The number of obstacles, u.

    Raises
    ------
    ob.InvalidValueError
        If there are fewer than three obstacles, the dimensions differ,
        or two obstacles intersect.
    """

    def __init__(
        self, obstacles: Sequence[ObstacleBase], tolerances: ob.Tolerances | None = None
    ) -> None:
        obstacles = tuple(obstacles)
        if len(obstacles) < 3:
            raise ob.InvalidValueError(
                f"An open billiard needs at least three obstacles, got {len(obstacles)}."
            )

        dimensions = {obstacle.dimension for obstacle in obstacles}
        if len(dimensions) != 1:
            raise ob.InvalidValueError(
                f"Obstacles have mixed dimensions {sorted(dimensions)}."
            )

        for i in range(len(obstacles)):
            for j in range(i + 1, len(obstacles)):
                gap = ob.geometry.separation(obstacles[i], obstacles[j], tolerances)
                if gap <= 0:
                    raise ob.InvalidValueError(f"Obstacles {i} and {j} are not disjoint.")

        self.obstacles: Final[tuple[ObstacleBase, ...]] = obstacles
        self.dimension: Final[int] = dimensions.pop()
        self.size: Final[int] = len(obstacles)

    def __len__(self) -> int:
        return self.size

    def __getitem__(self, index: int) -> ObstacleBase:
        return self.obstacles[index]

    def __iter__(self) -> Iterator[ObstacleBase]:
        return iter(self.obstacles)

    def pairs(self) -> Iterator[tuple[int, int]]:
        """
        Iterates over all unordered index pairs i < j.
        """
        for i in range(self.size):
            for j in range(i + 1, self.size):
                yield i, j

    def ordered_pairs(self) -> Iterator[tuple[int, int]]:
        """
        Iterates over all ordered index pairs i != j in lexicographic order.
        """
        for i in range(self.size):
            for j in range(self.size):
                if i != j:
                    yield i, j

    def __repr__(self) -> str:
        return f"Billiard({list(self.obstacles)!r})"
