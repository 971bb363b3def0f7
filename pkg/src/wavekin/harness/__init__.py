"""Reproducibility harness: grid sampling, export, rendering, verification, CLI."""

from .config import RunConfig, parse_config_file
from .grid import AxisSpec, FieldGrid, sample
from .io import export, export_text, import_csv, import_json
from .plots import render
from .verify import DEFAULT_SEED, run_verification, write_report

__all__ = [
    "AxisSpec",
    "DEFAULT_SEED",
    "FieldGrid",
    "RunConfig",
    "export",
    "export_text",
    "import_csv",
    "import_json",
    "parse_config_file",
    "render",
    "run_verification",
    "sample",
    "write_report",
]
