import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

import openbilliard as ob
from openbilliard.dynamics import PhasePoint
from openbilliard.orbits import SymbolSequence
from openbilliard.testing import assert_points_close, grid_orbit


def test_period_two_is_closest_pair(three_disks):
    orbit = ob.orbits.find_periodic_orbit(three_disks, SymbolSequence((0, 1)))

    assert orbit.period == 2
    assert_points_close(orbit.points, [[0.371391, 9.071523], [3.257219, 1.856953]], 1e-6)
    assert orbit.length == pytest.approx(2 * (math.sqrt(116) - 3), rel=1e-10)
    assert_allclose(orbit.flights, math.sqrt(116) - 3, rtol=1e-10)
    assert orbit.residual < 1e-8


def test_triangle_orbit_against_grid_search(three_disks):
    orbit = ob.orbits.find_periodic_orbit(three_disks, SymbolSequence((0, 1, 2)))
    reference = grid_orbit(three_disks, (0, 1, 2), samples=2000)

    assert_points_close(orbit.points, reference, 1e-6)
    assert orbit.length == pytest.approx(ob.orbits.orbit_length(reference), rel=1e-9)
    assert orbit.residual < 1e-8
    assert orbit.sweeps >= 1


def test_orbit_is_a_billiard_trajectory(three_disks):
    orbit = ob.orbits.find_periodic_orbit(three_disks, SymbolSequence((0, 1, 0, 2)))
    points = orbit.points
    n = orbit.period
    symbols = orbit.sequence.symbols

    for j in range(n):
        start = PhasePoint.create(points[j], points[(j + 1) % n] - points[j], symbols[j])
        _, event = ob.dynamics.billiard_map(start, three_disks)

        assert event.obstacle == symbols[(j + 1) % n]
        assert_allclose(event.point, points[(j + 1) % n], atol=1e-6)


def test_rotated_sequence_gives_same_orbit(three_disks):
    orbit = ob.orbits.find_periodic_orbit(three_disks, SymbolSequence((0, 1, 2)))
    rotated = ob.orbits.find_periodic_orbit(three_disks, SymbolSequence((1, 2, 0)))

    assert_points_close(rotated.points, orbit.points, 1e-8, ordered=False)
    assert rotated.length == pytest.approx(orbit.length, rel=1e-12)


def test_inadmissible_sequences(three_disks):
    with pytest.raises(ob.InadmissibleSequenceError):
        ob.orbits.find_periodic_orbit(three_disks, SymbolSequence((0, 1), periodic=False))

    with pytest.raises(ob.InadmissibleSequenceError):
        ob.orbits.find_periodic_orbit(three_disks, SymbolSequence((0,)))

    with pytest.raises(ob.InadmissibleSequenceError):
        ob.orbits.find_periodic_orbit(three_disks, SymbolSequence((0, 3)))


def test_sweep_budget(three_disks):
    with pytest.raises(ob.NoConvergenceError):
        ob.orbits.find_periodic_orbit(three_disks, SymbolSequence((0, 1, 2)), max_sweeps=1)


def test_stalled_orbit_is_rejected(three_disks):
    loose = ob.Tolerances(orbit=10.0)
    sequence = SymbolSequence((0, 1, 2))

    with pytest.raises(ob.NoConvergenceError):
        ob.orbits.find_periodic_orbit(three_disks, sequence, loose)

    orbit = ob.orbits.find_periodic_orbit(
        three_disks, sequence, loose.replace(orbit_residual=10.0)
    )
    assert orbit.sweeps == 1
    assert orbit.residual > 1e-8


def test_reflection_residual_of_wrong_polygon(three_disks):
    centers = np.array([obstacle.center for obstacle in three_disks])
    points = np.array([three_disks[k].project(centers.mean(axis=0)) for k in range(3)])

    residual = ob.orbits.reflection_residual(three_disks, SymbolSequence((0, 1, 2)), points)

    assert residual > 1e-3


def test_closest_pairs(three_disks):
    pairs = ob.orbits.all_closest_pairs(three_disks)

    assert list(pairs) == [(0, 1), (0, 2), (1, 2)]
    assert len(pairs) == 3
    assert_allclose(pairs.point(0, 1), [0.371391, 9.071523], atol=1e-6)
    assert_allclose(pairs.point(1, 0), [3.257219, 1.856953], atol=1e-6)
    assert pairs[(1, 0)].distance == pairs[(0, 1)].distance
    assert pairs.all_points().shape == (6, 2)


def test_orbit_trajectory_becomes_periodic(three_disks):
    orbit = ob.orbits.find_periodic_orbit(three_disks, SymbolSequence((0, 1)))
    trajectory = ob.orbits.orbit_trajectory(three_disks, orbit, 30)

    assert len(trajectory) == 30
    assert not trajectory.escaped
    assert set(trajectory.symbols) == {0, 1}
    assert np.all(np.diff(trajectory.symbols) != 0)
    assert_allclose(trajectory.flights[1:], math.sqrt(116) - 3, rtol=1e-9)
    assert np.all((np.array(trajectory.deltas) > 0) & (np.array(trajectory.deltas) < 1))
    assert trajectory.deltas[-1] == pytest.approx(trajectory.deltas[-3], rel=1e-8)


@pytest.fixture(scope="module")
def random_disks():
    return ob.special.random_disk_billiard(4, seed=3)


def random_orbits(billiard, seed, count=4):
    rng = np.random.default_rng(seed)
    sequences = ob.orbits.random_periodic_sequences(billiard.size, 4, count, rng)
    return [ob.orbits.find_periodic_orbit(billiard, sequence) for sequence in sequences]


@pytest.mark.parametrize("name", ["three_disks", "equilateral", "random_disks"])
def test_random_orbits_against_grid_search(name, request):
    billiard = request.getfixturevalue(name)

    for orbit in random_orbits(billiard, 40):
        reference = grid_orbit(billiard, orbit.sequence.symbols, samples=1000)

        assert_points_close(orbit.points, reference, 1e-5)
        assert orbit.residual <= 1e-8

        points = orbit.points
        symbols = orbit.sequence.symbols
        n = orbit.period
        for j in range(n):
            start = PhasePoint.create(points[j], points[(j + 1) % n] - points[j], symbols[j])
            after, event = ob.dynamics.billiard_map(start, billiard)
            chord = points[(j + 2) % n] - points[(j + 1) % n]

            assert event.obstacle == symbols[(j + 1) % n]
            assert_allclose(event.point, points[(j + 1) % n], atol=1e-8)
            assert_allclose(after.v, chord / np.linalg.norm(chord), atol=1e-8)


@pytest.mark.parametrize("name", ["three_disks", "random_disks"])
def test_orbits_minimize_length(name, request):
    billiard = request.getfixturevalue(name)
    rng = np.random.default_rng(41)

    for orbit in random_orbits(billiard, 42):
        obstacles = [billiard[index] for index in orbit.sequence.symbols]
        for _ in range(50):
            shifted = orbit.points + rng.normal(scale=1e-3, size=orbit.points.shape)
            moved = np.array([obstacle.project(p) for obstacle, p in zip(obstacles, shifted)])

            assert ob.orbits.orbit_length(moved) >= orbit.length - 1e-12
