import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

import openbilliard as ob

from .config import BilliardConfig


@dataclass
class RunReport:
    """
    The machine-readable result of one command.

    Serializing the same report twice gives identical bytes: keys are sorted and no
    timestamps or host data are included.

    Attributes
    ----------
    command : str
        The subcommand that produced the report.
    config : BilliardConfig
        The configuration, contributing its hash, tolerances and options as provenance.
    results : dict[str, Any]
        The command-specific results.
    arguments : dict[str, Any]
        The command-line arguments that influence the results.
    """

    command: str
    config: BilliardConfig
    results: dict[str, Any] = field(default_factory=dict)
    arguments: dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "arguments": self.arguments,
            "results": self.results,
            "provenance": {
                "config_sha256": self.config.sha256,
                "tolerances": self.config.tolerances.as_dict(),
                "options": self.config.options.as_dict(),
                "version": ob.__version__,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2, default=_plain) + "\n"

    def write(self, path: str | os.PathLike) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")


def _plain(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, tuple):
        return list(value)
    raise TypeError(f"Cannot serialize {type(value).__name__}.")


def format_table(rows: list[tuple[str, ...]]) -> list[str]:
    """Aligns rows of strings into columns."""
    if not rows:
        return []
    widths = [max(len(row[k]) for row in rows) for k in range(len(rows[0]))]
    return ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
