import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

import openbilliard as ob
from openbilliard.dynamics import PhasePoint


def bounce_start(billiard: ob.geometry.Billiard) -> PhasePoint:
    # midpoint between obstacles 1 and 0, heading for obstacle 0
    first, second = billiard[0].center, billiard[1].center
    return PhasePoint.create((first + second) / 2, first - second)


def test_period_two_bounce(equilateral):
    trajectory = ob.dynamics.simulate(bounce_start(equilateral), equilateral, 6)
    fixed_point = 1 + math.sqrt(1 + 2 / 8)

    assert len(trajectory) == 6
    assert not trajectory.escaped
    assert trajectory.symbols == (0, 1, 0, 1, 0, 1)
    assert_allclose(trajectory.flights, [4.0, 8.0, 8.0, 8.0, 8.0, 8.0], atol=1e-9)
    assert_allclose(trajectory.angles, 0.0, atol=1e-6)
    assert trajectory.curvatures[-1] == pytest.approx(fixed_point, rel=1e-8)
    assert trajectory.deltas[-1] == pytest.approx(1 / (1 + 8 * fixed_point), rel=1e-8)
    assert trajectory.flight_time() == pytest.approx(44.0, abs=1e-8)


def test_period_two_bounce_3d():
    billiard = ob.special.equilateral_disks(3, radius=1.0, side=10.0, dimension=3)
    trajectory = ob.dynamics.simulate(bounce_start(billiard), billiard, 6)
    fixed_point = 1 + math.sqrt(1 + 2 / 8)

    assert_allclose(trajectory.fronts[-1].eigenvalues, fixed_point, rtol=1e-8)
    assert trajectory.deltas[-1] == pytest.approx(1 / (1 + 8 * fixed_point), rel=1e-8)


def test_escape(equilateral):
    start = PhasePoint.create([0.0, 0.0], [0.0, 1.0])
    trajectory = ob.dynamics.simulate(start, equilateral, 10)

    assert trajectory.escaped
    assert len(trajectory) == 1
    assert len(trajectory.fronts) == 2
    assert len(trajectory.deltas) == 1


def test_trajectory_bookkeeping(three_disks):
    start = ob.testing.random_phase_point(three_disks, 3)
    trajectory = ob.dynamics.simulate(start, three_disks, 5)

    n = len(trajectory)
    assert len(trajectory.fronts) == n + 1
    assert len(trajectory.directions) == n + 1
    assert trajectory.points.shape == (n, 2)
    assert trajectory.contraction == pytest.approx(np.prod(trajectory.deltas))
    assert_allclose(trajectory.delta_products, np.cumprod(trajectory.deltas))
    assert np.all(np.asarray(trajectory.deltas) > 0)
    assert np.all(np.asarray(trajectory.deltas) < 1)


def test_reject_negative_step_count(equilateral):
    with pytest.raises(ob.InvalidValueError):
        ob.dynamics.simulate(bounce_start(equilateral), equilateral, -1)


def test_events_from_points(three_disks):
    pair = ob.orbits.all_closest_pairs(three_disks)[(0, 1)]
    events = ob.dynamics.events_from_points(three_disks, [pair.p_ij, pair.p_ji], [0, 1], 4)

    assert [event.obstacle for event in events] == [0, 1, 0, 1]
    assert_allclose([event.flight for event in events], pair.distance)
    assert_allclose([event.angle for event in events], 0.0, atol=1e-7)

    with pytest.raises(ob.InvalidValueError):
        ob.dynamics.events_from_points(three_disks, [pair.p_ij], [0])


def rotated(v: np.ndarray, angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([c * v[0] - s * v[1], s * v[0] + c * v[1]])


@pytest.mark.parametrize("tilt", [0.0, 1e-6, -3e-6])
def test_time_reversal(equilateral, tilt):
    first, second = equilateral[0].center, equilateral[1].center
    start = PhasePoint.create((first + second) / 2, rotated(first - second, tilt))
    forward = ob.dynamics.simulate(start, equilateral, 3)
    assert len(forward) == 3

    backward = ob.dynamics.simulate(forward.final.reversed(equilateral), equilateral, 2)

    assert backward.symbols == forward.symbols[-2::-1]
    assert_allclose(backward.points, forward.points[-2::-1], atol=1e-8)
    assert_allclose(backward.flights, forward.flights[:0:-1], atol=1e-8)
