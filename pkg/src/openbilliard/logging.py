import openbilliard as ob


def _truncate(value: float, truncation: float | None) -> float:
    if truncation is None or abs(value) >= truncation:
        return value
    else:
        return 0.0


def log(
    step: int,
    trajectory: ob.dynamics.Trajectory,
    precision: int = 6,
    truncate: float | None = None,
) -> None:
    """
    Prints the data of one collision of a trajectory for inspection.

    The idea is that you call this function for every collision and get a table of the
    quantities that enter the dimension estimates: the struck obstacle, the flight length,
    the collision angle, the front curvature k_j right after the reflection, the
    contraction factor of the flight into the collision, and the running product.

    Parameters
    ----------
    step : int
        The zero-based collision index.
    trajectory : ob.dynamics.Trajectory
        The trajectory to log.
    precision : int, default=6
        How many significant digits should be printed.
    truncate: float | None, default=None
        If set, set all calculated values smaller than this boundary to zero.
        The main use case is for tests; values that are approximately zero can
        differ in their actual value based on numpy version etc. This causes
        regression tests to fail for uninteresting reasons.
    """
    if not 0 <= step < len(trajectory):
        raise ob.InvalidValueError(
            f"Collision {step} does not exist, the trajectory has {len(trajectory)}."
        )

    event = trajectory.events[step]
    front = trajectory.fronts[step + 1]
    curvature = front.directional_curvature(trajectory.directions[step + 1])
    values = [
        event.flight,
        event.angle,
        curvature,
        trajectory.deltas[step],
        trajectory.delta_products[step],
    ]
    flight, angle, k, delta, product = (_truncate(float(v), truncate) for v in values)
    point = ", ".join(f"{_truncate(float(x), truncate):.{precision}}" for x in event.point)

    print(
        f"{step + 1:4d}  K{event.obstacle + 1}  q = ({point})  d = {flight:.{precision}}  "
        f"φ = {angle:.{precision}}  k = {k:.{precision}}  δ = {delta:.{precision}}  "
        f"∏δ = {product:.{precision}}"
    )
