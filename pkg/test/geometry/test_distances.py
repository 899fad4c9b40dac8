import math

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

import openbilliard as ob
from openbilliard.geometry import Ball, Billiard, Ellipse


def test_separation():
    first, second = Ball([0.0, 0.0], 1.0), Ball([5.0, 0.0], 2.0)
    assert ob.geometry.separation(first, second) == pytest.approx(2.0)

    # circles as ellipses take the general support-function path
    circle1, circle2 = Ellipse([0.0, 0.0], 1.0, 1.0), Ellipse([5.0, 0.0], 2.0, 2.0)
    assert ob.geometry.separation(circle1, circle2) == pytest.approx(2.0, abs=1e-8)

    overlapping = Ellipse([2.5, 0.0], 2.0, 1.0)
    assert ob.geometry.separation(circle1, overlapping) < 0


def test_closest_pair_of_disks(three_disks):
    p_ij, p_ji, distance = ob.geometry.closest_pair(three_disks[0], three_disks[1])

    assert_allclose(p_ij, [0.371391, 9.071523], atol=1e-6)
    assert_allclose(p_ji, [3.257219, 1.856953], atol=1e-6)
    assert distance == pytest.approx(math.sqrt(116) - 3, abs=1e-12)


def test_closest_pair_is_symmetric():
    first = Ellipse([0.0, 0.0], 2.0, 1.0, 0.4)
    second = Ellipse([6.0, 3.0], 1.5, 0.5, -0.2)

    p, q, distance = ob.geometry.closest_pair(first, second)
    q_swapped, p_swapped, distance_swapped = ob.geometry.closest_pair(second, first)

    assert_array_equal(p, p_swapped)
    assert_array_equal(q, q_swapped)
    assert distance == distance_swapped


def test_closest_pair_is_normal_to_both_boundaries():
    first = Ellipse([0.0, 0.0], 2.0, 1.0, 0.4)
    second = Ellipse([6.0, 3.0], 1.5, 0.5, -0.2)

    p, q, distance = ob.geometry.closest_pair(first, second)
    direction = (q - p) / distance

    assert_allclose(first.normal(p), direction, atol=1e-8)
    assert_allclose(second.normal(q), -direction, atol=1e-8)


def test_closest_pair_with_itself():
    ball = Ball([0.0, 0.0], 1.0)

    with pytest.raises(ob.InvalidValueError):
        ob.geometry.closest_pair(ball, Ball([0.0, 0.0], 1.0))


def test_hull_gap_of_disks(three_disks):
    b = [
        ob.geometry.hull_gap(three_disks[0], (three_disks[1], three_disks[2])),
        ob.geometry.hull_gap(three_disks[1], (three_disks[0], three_disks[2])),
        ob.geometry.hull_gap(three_disks[2], (three_disks[0], three_disks[1])),
    ]

    # distances to the common tangent lines of the other two disks
    expected = [
        10 * math.sqrt(63) / 8 - 3.5,
        20 * (math.sqrt(7168) - 40) / 232 - 1,
        20 * (math.sqrt(7360) - 20) / 232 - 3,
    ]
    assert_allclose(b, expected, atol=1e-9)


def test_hull_gap_closed_form_agrees_with_support_functions(three_disks):
    circles = [Ellipse(disk.center, disk.radius, disk.radius) for disk in three_disks]

    for k, (i, j) in [(0, (1, 2)), (1, (0, 2)), (2, (0, 1))]:
        exact = ob.geometry.hull_gap(three_disks[k], (three_disks[i], three_disks[j]))
        sampled = ob.geometry.hull_gap(circles[k], (circles[i], circles[j]))
        assert sampled == pytest.approx(exact, abs=1e-7)


def test_no_eclipse_check(three_disks):
    report = ob.geometry.no_eclipse_check(three_disks)

    assert report.passed
    assert len(report.checks) == 3
    assert report.failures == ()
    assert report.margin(2, (1, 0)) == pytest.approx(2.6715899, abs=1e-7)
    assert report.min_margin == pytest.approx(2.6715899, abs=1e-7)

    with pytest.raises(ob.InvalidValueError):
        report.margin(0, (0, 1))


def test_no_eclipse_violation():
    billiard = Billiard([Ball([0.0, 0.0], 1.0), Ball([5.0, 0.0], 1.0), Ball([10.0, 0.0], 1.0)])
    report = ob.geometry.no_eclipse_check(billiard)

    assert not report.passed
    assert len(report.failures) == 1
    assert report.failures[0].obstacle == 1
    assert report.failures[0].hull_of == (0, 2)

    with pytest.raises(ob.EclipseViolationError):
        ob.geometry.distance_obstacle_to_hull(billiard[1], (billiard[0], billiard[2]))

    assert ob.geometry.distance_obstacle_to_hull(
        billiard[0], (billiard[1], billiard[2])
    ) == pytest.approx(3.0)


def test_max_boundary_distance():
    first, second = Ball([0.0, 0.0], 1.0), Ball([5.0, 0.0], 2.0)
    assert ob.geometry.max_boundary_distance(first, second) == pytest.approx(8.0)

    circle1, circle2 = Ellipse([0.0, 0.0], 1.0, 1.0), Ellipse([5.0, 0.0], 2.0, 2.0)
    assert ob.geometry.max_boundary_distance(circle1, circle2) == pytest.approx(8.0, abs=1e-8)


def test_three_dimensional_separation():
    first = ob.geometry.Ellipsoid([0.0, 0.0, 0.0], [2.0, 1.0, 1.0])
    second = Ball([6.0, 0.0, 0.0], 1.0)

    assert ob.geometry.separation(first, second) == pytest.approx(3.0, abs=1e-6)
    assert ob.geometry.max_boundary_distance(first, second) == pytest.approx(9.0, abs=1e-6)
