import pytest

import openbilliard as ob


def test_logging(equilateral, capsys):
    start = ob.dynamics.PhasePoint.create([0.0, 0.0], [0.0, 1.0])
    trajectory = ob.dynamics.simulate(start, equilateral, 3)

    ob.log(0, trajectory)
    ob.log(len(trajectory) - 1, trajectory, precision=3, truncate=1e-10)

    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("   1  K1")
    assert "∏δ" in lines[1]


def test_reject_missing_step(equilateral):
    start = ob.dynamics.PhasePoint.create([0.0, 0.0], [0.0, 1.0])
    trajectory = ob.dynamics.simulate(start, equilateral, 2)

    with pytest.raises(ob.InvalidValueError):
        ob.log(len(trajectory), trajectory)

    with pytest.raises(ob.InvalidValueError):
        ob.log(-1, trajectory)
