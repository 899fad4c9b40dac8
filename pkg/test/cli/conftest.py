import json

import pytest


@pytest.fixture
def three_disks_data() -> dict:
    return {
        "schema_version": 1,
        "dimension": 2,
        "obstacles": [
            {"kind": "ball", "center": [0, 10], "radius": 1},
            {"kind": "ball", "center": [4, 0], "radius": 2},
            {"kind": "ball", "center": [-4, 0], "radius": 3},
        ],
    }


@pytest.fixture
def write_config(tmp_path):
    def write(data: dict, name: str = "billiard.json") -> str:
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return write
