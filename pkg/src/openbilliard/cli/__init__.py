"""
Command line interface: configuration files, subcommands and deterministic reports.

Obstacles are numbered from 1 on the command line and in all reports, and from 0 in the
library.
"""

__all__ = [
    "BilliardConfig",
    "RunReport",
    "build_parser",
    "load_config",
    "main",
    "parse_config",
]

from .config import BilliardConfig, load_config, parse_config
from .report import RunReport
from .main import build_parser, main
