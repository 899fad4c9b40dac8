import json
import math

import pytest

from openbilliard.cli import main


@pytest.fixture
def config_file(three_disks_data, write_config):
    return write_config(three_disks_data, "three_disks.json")


def test_validate(config_file, capsys):
    assert main(["validate", "--config", config_file]) == 0

    output = capsys.readouterr().out
    assert "no-eclipse condition: satisfied" in output
    assert "K1" in output and "K0" not in output


def test_validate_failure(three_disks_data, write_config, capsys):
    three_disks_data["obstacles"][0].update(center=[0, 0.5], radius=0.5)

    assert main(["validate", "--config", write_config(three_disks_data)]) == 1
    assert "violated" in capsys.readouterr().out


def test_bounds_report(config_file, tmp_path):
    out = tmp_path / "bounds.json"
    arguments = ["bounds", "--config", config_file, "--mode", "natural", "--variant", "eq1"]

    assert main(arguments + ["--json", str(out)]) == 0
    report = json.loads(out.read_text(encoding="utf-8"))

    natural = report["results"]["natural"]
    assert report["command"] == "bounds"
    assert report["arguments"]["mode"] == "natural"
    assert list(natural["bounds"]) == ["two_sided_eq1"]
    assert natural["bounds"]["two_sided_eq1"]["lower"] == pytest.approx(0.326516, abs=1e-5)
    assert natural["bounds"]["two_sided_eq1"]["upper"] == pytest.approx(1.166894, abs=1e-5)
    assert natural["constants"]["pairs"][0]["i"] == 1
    assert len(report["provenance"]["config_sha256"]) == 64

    first = out.read_bytes()
    assert main(arguments + ["--json", str(out)]) == 0
    assert out.read_bytes() == first


def test_bounds_with_hull_test(config_file, tmp_path, capsys):
    out = tmp_path / "bounds.json"
    arguments = ["bounds", "--config", config_file, "--mode", "adjusted", "--test-conjecture"]
    arguments += ["--max-period", "3", "--tolerance-profile", "fast", "--json", str(out)]

    assert main(arguments) == 0
    result = json.loads(out.read_text(encoding="utf-8"))["results"]["hull_conjecture"]
    assert result["orbits_tested"] == 5
    assert result["max_violation"] <= 1e-7
    assert min(result["worst_sequence"]) >= 1
    assert "[hull conjecture]" in capsys.readouterr().out


def test_orbit(config_file, tmp_path, capsys):
    out = tmp_path / "orbit.json"

    arguments = ["orbit", "--config", config_file, "--sequence", "1,2", "--json", str(out)]
    assert main(arguments) == 0
    result = json.loads(out.read_text(encoding="utf-8"))["results"]
    assert result["sequence"] == [1, 2]
    assert result["length"] == pytest.approx(2 * (math.sqrt(116) - 3), rel=1e-9)
    assert "length F" in capsys.readouterr().out


def test_orbit_failures(config_file, capsys):
    assert main(["orbit", "--config", config_file, "--sequence", "1,1"]) == 1
    arguments = ["orbit", "--config", config_file, "--sequence", "1,2,3", "--max-iter", "1"]
    assert main(arguments) == 3
    assert capsys.readouterr().err.startswith("error:")


def test_invalid_config(three_disks_data, write_config, capsys):
    three_disks_data["obstacles"][1]["radius"] = "big"
    path = write_config(three_disks_data)

    assert main(["validate", "--config", path]) == 2
    assert "obstacles[1].radius" in capsys.readouterr().err


def test_hull(config_file, capsys):
    assert main(["hull", "--config", config_file]) == 0

    output = capsys.readouterr().out
    assert "p12" in output and "p31" in output
    assert "affine dimension 2" in output


def test_sampled_conjecture_is_reproducible(config_file, tmp_path):
    reports = []
    for name in ["first.json", "second.json"]:
        out = tmp_path / name
        arguments = ["hull", "--config", config_file, "--test-conjecture", "--max-period", "8"]
        arguments += ["--samples", "5", "--tolerance-profile", "fast", "--json", str(out)]
        assert main(arguments) == 0
        reports.append(out.read_bytes())

    assert reports[0] == reports[1]
    result = json.loads(reports[0])["results"]["hull_conjecture"]
    assert result["sequences_sampled"]


def test_simulate(config_file, capsys):
    arguments = ["simulate", "--config", config_file, "--q", "0,5", "--v", "0,1"]
    arguments += ["--steps", "5"]

    assert main(arguments) == 0
    output = capsys.readouterr().out
    assert output.startswith("   1  K1")
    assert "escaped after 1 collisions" in output


def test_simulate_bad_vector(config_file):
    arguments = ["simulate", "--config", config_file, "--q", "0,5,1", "--v", "0,1"]

    assert main(arguments) == 1


@pytest.mark.parametrize("what", ["billiard", "orbit", "domain"])
def test_plot(config_file, tmp_path, what):
    out = tmp_path / f"{what}.svg"

    assert main(["plot", "--config", config_file, "--what", what, "--out", str(out)]) == 0
    assert "<svg" in out.read_text(encoding="utf-8")


def test_plot_3d_billiard(write_config, tmp_path):
    data = {
        "schema_version": 1,
        "dimension": 3,
        "obstacles": [
            {"kind": "ball", "center": [0, 6, 0], "radius": 1},
            {"kind": "ball", "center": [5, -3, 0], "radius": 1},
            {"kind": "ball", "center": [-5, -3, 0], "radius": 1},
        ],
    }
    out = tmp_path / "billiard.svg"

    assert main(["plot", "--config", write_config(data), "--out", str(out)]) == 1
    assert not out.exists()


def test_bounds_help_names_radius_assignment(capsys):
    with pytest.raises(SystemExit) as info:
        main(["bounds", "--help"])

    assert info.value.code == 0
    assert "r=1 at the apex" in " ".join(capsys.readouterr().out.split())
