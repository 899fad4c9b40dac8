import logging
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

import openbilliard as ob


def test_isosceles_three_disks(three_disks):
    assert three_disks.size == 3
    assert three_disks.dimension == 2
    assert_allclose([obstacle.center for obstacle in three_disks], [[0, 10], [4, 0], [-4, 0]])
    assert [obstacle.radius for obstacle in three_disks] == [1.0, 2.0, 3.0]
    assert ob.geometry.no_eclipse_check(three_disks).passed


def test_isosceles_variants():
    billiard = ob.special.isosceles_three_disks(3.0, 2.0, 1.0)
    assert [obstacle.radius for obstacle in billiard] == [3.0, 2.0, 1.0]

    with pytest.raises(ob.InvalidValueError):
        ob.special.isosceles_three_disks(base=-1.0)

    with pytest.raises(ob.InvalidValueError):
        ob.special.isosceles_three_disks(right_radius=5.0, left_radius=5.0)


def test_equilateral_disks(equilateral):
    centers = np.array([obstacle.center for obstacle in equilateral])

    assert_allclose(centers[0], [0, 10 / math.sqrt(3)], atol=1e-12)
    assert_allclose(np.linalg.norm(centers - np.roll(centers, 1, axis=0), axis=1), 10.0)

    square = ob.special.equilateral_disks(4, radius=1.0, side=10.0, dimension=3)
    assert square.size == 4
    assert square.dimension == 3

    with pytest.raises(ob.InvalidValueError):
        ob.special.equilateral_disks(2)

    with pytest.raises(ob.InvalidValueError):
        ob.special.equilateral_disks(3, dimension=4)


def test_tetrahedral_balls(tetrahedral):
    centers = np.array([obstacle.center for obstacle in tetrahedral])
    distances = [np.linalg.norm(centers[i] - centers[j]) for i, j in tetrahedral.pairs()]

    assert tetrahedral.dimension == 3
    assert_allclose(distances, 10.0)
    assert ob.orbits.hull_H(tetrahedral).affine_dimension == 3


def test_random_disk_billiard():
    billiard = ob.special.random_disk_billiard(4, seed=3)
    again = ob.special.random_disk_billiard(4, seed=3)

    assert billiard.size == 4
    assert ob.geometry.no_eclipse_check(billiard).passed
    assert_allclose(
        [obstacle.center for obstacle in billiard], [obstacle.center for obstacle in again]
    )

    with pytest.raises(ob.InvalidValueError):
        ob.special.random_disk_billiard(2, seed=0)

    with pytest.raises(ob.NoConvergenceError):
        ob.special.random_disk_billiard(3, seed=0, box=1.0, max_attempts=5)


def test_random_disk_billiard_rejects_silently(caplog):
    with caplog.at_level(logging.DEBUG, logger="openbilliard"):
        billiard = ob.special.random_disk_billiard(4, seed=11, box=12.0)

    assert billiard.size == 4
    assert not [record for record in caplog.records if record.levelno >= logging.WARNING]
    assert any("accepted after" in record.getMessage() for record in caplog.records)
