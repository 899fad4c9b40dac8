import hashlib
import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import openbilliard as ob
from openbilliard.geometry import Ball, Billiard, Ellipse, Ellipsoid, ObstacleBase

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class BilliardConfig:
    """
    The parsed content of a billiard configuration file.

    Attributes
    ----------
    dimension : int
        The ambient dimension.
    obstacles : tuple[ObstacleBase, ...]
        The obstacles in file order; index k in the file is obstacle k+1 on the command line.
    tolerances : ob.Tolerances
        The tolerance profile with the file's overrides applied.
    options : ob.EstimateOptions
        The modelling switches.
    sha256 : str
        Hash of the canonical JSON form of the file content.
    """

    dimension: int
    obstacles: tuple[ObstacleBase, ...]
    tolerances: ob.Tolerances
    options: ob.EstimateOptions
    sha256: str

    def billiard(self) -> Billiard:
        """
        Raises
        ------
        ob.InvalidValueError
            If the obstacles overlap or are fewer than three.
        """
        return Billiard(self.obstacles, self.tolerances)


def load_config(path: str | os.PathLike, profile: str = "default") -> BilliardConfig:
    """
    Reads and validates a JSON configuration file.

    Raises
    ------
    ob.ConfigParseError
        If the file cannot be read, is no valid JSON, or a field is missing or invalid.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as error:
        raise ob.ConfigParseError(f"Cannot read configuration: {error}")

    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise ob.ConfigParseError(
            f"Invalid JSON at line {error.lineno}, column {error.colno}: {error.msg}"
        )
    return parse_config(data, profile)


def parse_config(data: Any, profile: str = "default") -> BilliardConfig:
    """
    Validates configuration data that has already been decoded from JSON.

    Raises
    ------
    ob.ConfigParseError
        If a field is missing or invalid; the error names the field path.
    """
    if not isinstance(data, dict):
        raise ob.ConfigParseError("The configuration must be a JSON object.")

    version = _require(data, "schema_version", "")
    if version != SCHEMA_VERSION:
        raise ob.ConfigParseError(
            f"Unsupported schema version {version}, expected {SCHEMA_VERSION}.",
            "schema_version",
        )

    dimension = _require(data, "dimension", "")
    if dimension not in (2, 3):
        raise ob.ConfigParseError(f"Dimension must be 2 or 3, got {dimension}.", "dimension")

    entries = _require(data, "obstacles", "")
    if not isinstance(entries, list):
        raise ob.ConfigParseError("Expected a list of obstacles.", "obstacles")
    obstacles = tuple(
        _parse_obstacle(entry, dimension, f"obstacles[{index}]")
        for index, entry in enumerate(entries)
    )

    try:
        base = ob.Tolerances.from_profile(profile)
    except ob.InvalidValueError as error:
        raise ob.ConfigParseError(str(error), "--tolerance-profile")
    tolerances = _parse_record(data.get("tolerances", {}), "tolerances", base.replace)
    options = _parse_record(data.get("options", {}), "options", ob.EstimateOptions)

    canonical = json.dumps(data, sort_keys=True, separators=(",", ":")).encode("utf-8")
    return BilliardConfig(
        dimension, obstacles, tolerances, options, hashlib.sha256(canonical).hexdigest()
    )


def _require(data: dict, key: str, path: str) -> Any:
    if key not in data:
        raise ob.ConfigParseError("Missing required field.", f"{path}.{key}" if path else key)
    return data[key]


def _number(data: dict, key: str, path: str) -> float:
    value = _require(data, key, path)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ob.ConfigParseError(f"Expected a number, got {value!r}.", f"{path}.{key}")
    return float(value)


def _vector(data: dict, key: str, path: str, length: int) -> list[float]:
    value = _require(data, key, path)
    if (
        not isinstance(value, list)
        or len(value) != length
        or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value)
    ):
        raise ob.ConfigParseError(f"Expected a list of {length} numbers.", f"{path}.{key}")
    return [float(x) for x in value]


def _parse_obstacle(entry: Any, dimension: int, path: str) -> ObstacleBase:
    if not isinstance(entry, dict):
        raise ob.ConfigParseError("Expected an object.", path)

    kind = _require(entry, "kind", path)
    center = _vector(entry, "center", path, dimension)
    try:
        if kind == "ball":
            return Ball(center, _number(entry, "radius", path))
        if kind == "ellipse" and dimension == 2:
            angle = _number(entry, "angle", path) if "angle" in entry else 0.0
            return Ellipse(center, _number(entry, "a", path), _number(entry, "b", path), angle)
        if kind == "ellipsoid" and dimension == 3:
            frame = None
            if "frame" in entry:
                frame = entry["frame"]
            return Ellipsoid(center, _vector(entry, "semi_axes", path, 3), frame)
    except ob.InvalidValueError as error:
        raise ob.ConfigParseError(str(error), path)

    raise ob.ConfigParseError(
        f"Unknown obstacle kind '{kind}' for dimension {dimension}.", f"{path}.kind"
    )


def _parse_record(values: Any, path: str, factory):
    if not isinstance(values, dict):
        raise ob.ConfigParseError("Expected an object.", path)
    try:
        return factory(**values)
    except TypeError as error:
        raise ob.ConfigParseError(f"Unknown field: {error}", path)
    except ob.InvalidValueError as error:
        raise ob.ConfigParseError(str(error), path)
