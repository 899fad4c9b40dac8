import math

import numpy as np
import pytest

import openbilliard as ob
from openbilliard.constants import DomainD, Rectangle
from openbilliard.dimension import curvature_map, fixed_point_residual, g, g_extrema


def test_g_values():
    assert g(1.0, 2.0) == pytest.approx(1 + math.sqrt(2))
    assert g(0.0, 1.0) == 0.0
    assert g(1 / 3, 9.376355) == pytest.approx(0.760196, abs=1e-6)

    values = g(np.array([1.0, 2.0]), np.array([2.0, 2.0]))
    assert values.shape == (2,)
    assert values[1] > values[0]


def test_g_monotonicity():
    gammas = np.linspace(0.1, 5, 50)
    thetas = np.linspace(0.5, 20, 50)

    assert np.all(np.diff(g(gammas, 3.0)) > 0)
    assert np.all(np.diff(g(1.0, thetas)) < 0)


def test_g_is_fixed_point():
    for gamma, theta in [(0.5, 1.0), (1.0, 8.0), (3.5, 3.0)]:
        value = g(gamma, theta)
        assert curvature_map(value, gamma, theta) == pytest.approx(value, rel=1e-12)
        assert fixed_point_residual(gamma, theta) < 1e-12


def test_iteration_converges():
    values = ob.dimension.iterate_curvature_map(0.0, 1.0, 8.0, 40)

    assert len(values) == 41
    assert values[0] == 0.0
    assert values[-1] == pytest.approx(g(1.0, 8.0), rel=1e-10)
    assert ob.dimension.iterate_curvature_map(5.0, 1.0, 8.0, 40)[-1] == pytest.approx(
        g(1.0, 8.0), rel=1e-10
    )


def test_invalid_arguments():
    with pytest.raises(ob.InvalidValueError):
        g(-1.0, 1.0)

    with pytest.raises(ob.InvalidValueError):
        g(1.0, 0.0)

    with pytest.raises(ob.InvalidValueError):
        ob.dimension.iterate_curvature_map(-1.0, 1.0, 1.0, 3)


def test_extrema_on_corners():
    rectangles = (Rectangle(1.0, 2.0, 3.0, 4.0, (0, 1)), Rectangle(0.5, 3.0, 5.0, 6.0, (1, 0)))
    domain = DomainD(rectangles, 0, "adjusted")
    extrema = g_extrema(domain)

    assert extrema.g_min == pytest.approx(g(0.5, 6.0))
    assert extrema.argmin == (0.5, 6.0, (1, 0))
    assert extrema.g_max == pytest.approx(max(g(2.0, 3.0), g(3.0, 5.0)))
    assert extrema.argmax[:2] == (3.0, 5.0)

    grid = [
        g(gamma, theta)
        for r in domain
        for gamma in np.linspace(r.gamma_lo, r.gamma_hi, 11)
        for theta in np.linspace(r.theta_lo, r.theta_hi, 11)
    ]
    assert min(grid) == pytest.approx(extrema.g_min)
    assert max(grid) == pytest.approx(extrema.g_max)

    with pytest.raises(ob.InvalidValueError):
        g_extrema(domain, iota=1)


def random_parameters(seed, n=10_000):
    rng = np.random.default_rng(seed)
    return rng.uniform(1e-3, 10.0, n), rng.uniform(0.1, 50.0, n), rng.uniform(1e-3, 1.0, n)


def test_fixed_point_on_random_parameters():
    gammas, thetas, _ = random_parameters(30)
    values = g(gammas, thetas)

    assert np.all(values > 0)
    residuals = np.abs(curvature_map(values, gammas, thetas) - values)
    assert np.all(residuals <= 1e-12 * np.maximum(1.0, values))


def test_monotonicity_on_random_parameters():
    gammas, thetas, steps = random_parameters(31)
    values = g(gammas, thetas)

    assert np.all(g(gammas + steps, thetas) >= values)
    assert np.all(g(gammas, thetas + steps) < values)
