import openbilliard as ob


def test_exports():
    ob.InvalidValueError("test")
    ob.DegeneratePointError("test")
    ob.PointOffBoundaryError("test")
    ob.NoConvergenceError("test")
    ob.EclipseViolationError("test")
    ob.DegenerateHullError("test")
    ob.TangentRayError("test")
    ob.GrazingCollisionError("test")
    ob.BasisMismatchError("test")
    ob.InadmissibleSequenceError("test")
    ob.UnsupportedError("test")


def test_config_parse_error_names_field():
    error = ob.ConfigParseError("Expected a number.", "obstacles[2].radius")

    assert error.field == "obstacles[2].radius"
    assert str(error).startswith("obstacles[2].radius")
