class InvalidValueError(Exception):
    """
    A function argument was incorrect, for example out of bounds.
    """

    pass


class DegeneratePointError(Exception):
    """
    A point has no unique closest point on an obstacle boundary.

    The typical example is the center of a ball, or more generally a point on the
    medial set of an ellipse or ellipsoid, where several boundary points are equally close.
    """

    pass


class PointOffBoundaryError(Exception):
    """
    A point was supposed to lie on an obstacle boundary, but does not.

    The implicit surface equation of the obstacle is violated by more than the
    boundary tolerance of the :py:class:`openbilliard.config.Tolerances` in use.
    """

    pass


class NoConvergenceError(Exception):
    """
    An iterative solver exhausted its iteration budget.

    Raised by the alternating projection for closest pairs and by the periodic orbit finder.
    """

    pass


class EclipseViolationError(Exception):
    """
    The no-eclipse condition is violated.

    Some obstacle touches or intersects the convex hull of two other obstacles,
    so the billiard is outside the class for which the dimension estimates hold.
    """

    pass


class DegenerateHullError(Exception):
    """
    A convex hull is too degenerate to be used.

    Flat hulls are usually only flagged; this error is raised where a computation
    genuinely requires a hull of sufficient dimension, for example the adjusted constants.
    """

    pass


class TangentRayError(Exception):
    """
    A ray grazes an obstacle.

    Tangent trajectories are excluded from the non-wandering set, so we refuse to
    reflect them instead of guessing a direction.
    """

    pass


class GrazingCollisionError(Exception):
    """
    A collision angle is too close to a right angle for the front curvature update.
    """

    pass


class BasisMismatchError(Exception):
    """
    Two front operators are not expressed in compatible orthonormal bases.
    """

    pass


class InadmissibleSequenceError(Exception):
    """
    A symbol sequence repeats an obstacle in consecutive positions or names unknown obstacles.
    """

    pass


class UnsupportedError(Exception):
    """
    The requested operation is not available for the given input.

    An example is plotting a 3D billiard.
    """

    pass


class ConfigParseError(Exception):
    """
    A configuration file could not be parsed.

    Parameters
    ----------
    message : str
        Human-readable description of the problem.
    field : str, default=""
        The JSON path of the offending field, for example ``obstacles[2].radius``.

    Attributes
    ----------
    field : str
        The JSON path of the offending field, or an empty string if the whole file is broken.
    """

    def __init__(self, message: str, field: str = "") -> None:
        if field:
            super().__init__(f"{field}: {message}")
        else:
            super().__init__(message)
        self.field = field
