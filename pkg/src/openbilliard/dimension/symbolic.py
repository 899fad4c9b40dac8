import itertools
import math
from collections.abc import Sequence

import openbilliard as ob
from openbilliard.dynamics import Trajectory
from openbilliard.orbits import SymbolSequence


def symbol_space_dim(u: int, theta: float) -> float:
    """
    The Hausdorff dimension -ln(u-1) / ln θ of the admissible sequences under the d_θ metric.

    Raises
    ------
    ob.InvalidValueError
        If u < 2 or θ is not inside (0, 1).
    """
    if u < 2 or not 0 < theta < 1:
        raise ob.InvalidValueError(f"Need u >= 2 and 0 < θ < 1, got u={u}, θ={theta}.")
    return -math.log(u - 1) / math.log(theta)


def code_trajectory(trajectory: Trajectory) -> SymbolSequence:
    """
    Returns the one-sided sequence of obstacles struck by a trajectory.

    Raises
    ------
    ob.InvalidValueError
        If the trajectory has no collision.
    """
    if len(trajectory) == 0:
        raise ob.InvalidValueError("A trajectory without collisions has no coding.")
    return SymbolSequence(trajectory.symbols, periodic=False)


def symbol_distance(
    first: SymbolSequence | Sequence[int], second: SymbolSequence | Sequence[int], theta: float
) -> float:
    """
    The distance d_θ = θ^m of two sequences whose first m symbols agree; 0 for equal ones.
    """
    if not 0 < theta < 1:
        raise ob.InvalidValueError(f"θ must lie in (0, 1), got {theta}.")
    first, second = tuple(first), tuple(second)
    if first == second:
        return 0.0

    agreeing = itertools.takewhile(lambda pair: pair[0] == pair[1], zip(first, second))
    common = sum(1 for _ in agreeing)
    return theta**common
