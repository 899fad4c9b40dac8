import pytest

import openbilliard as ob
from openbilliard.geometry import Ball, Billiard


def test_require_three_obstacles():
    with pytest.raises(ob.InvalidValueError):
        Billiard([Ball([0.0, 0.0], 1.0), Ball([5.0, 0.0], 1.0)])


def test_reject_overlapping_obstacles():
    with pytest.raises(ob.InvalidValueError):
        Billiard([Ball([0.0, 0.0], 1.0), Ball([1.5, 0.0], 1.0), Ball([0.0, 5.0], 1.0)])


def test_reject_mixed_dimensions():
    with pytest.raises(ob.InvalidValueError):
        Billiard([Ball([0.0, 0.0], 1.0), Ball([5.0, 0.0], 1.0), Ball([0.0, 5.0, 0.0], 1.0)])


def test_access(three_disks):
    assert three_disks.size == 3
    assert len(three_disks) == 3
    assert three_disks.dimension == 2
    assert three_disks[2].radius == 3.0
    assert [obstacle.radius for obstacle in three_disks] == [1.0, 2.0, 3.0]


def test_pairs(three_disks):
    assert list(three_disks.pairs()) == [(0, 1), (0, 2), (1, 2)]
    expected = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]
    assert list(three_disks.ordered_pairs()) == expected
