import pytest

import openbilliard as ob


@pytest.fixture(scope="module")
def three_disks() -> ob.geometry.Billiard:
    return ob.special.isosceles_three_disks()


@pytest.fixture(scope="module")
def equilateral() -> ob.geometry.Billiard:
    return ob.special.equilateral_disks(3, radius=1.0, side=10.0)


@pytest.fixture(scope="module")
def tetrahedral() -> ob.geometry.Billiard:
    return ob.special.tetrahedral_balls(radius=1.0, edge=10.0)


@pytest.fixture(scope="module")
def fast() -> ob.Tolerances:
    return ob.Tolerances.from_profile("fast")
