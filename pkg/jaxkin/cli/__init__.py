"""
Command line surface of the JaxKin package.

The submodules of this module are:

    * config: key=value configuration files
    * output: profile CSV files and run reports
    * runner: the IMEX run loop and RunReport
    * harness: self-convergence orders and asymptotic-preserving checks
    * main: argument parsing and the ``jaxkin`` entry point
"""
from .config import apply_settings, format_config, load_config_file, parse_config_text
from .harness import (
    AP_EPSILON_LIMIT,
    KINETIC_NOTE,
    APReport,
    ConvergenceTable,
    ap_check,
    l1_norm,
    observed_order,
    restrict,
    spatial_convergence,
    temporal_convergence,
)
from .main import build_parser, main, resolve_config
from .output import CSV_HEADER, csv_filename, read_profile_csv, write_profile_csv, write_report
from .runner import RunReport, RunResult, Snapshot, run_scenario

__all__ = [
    "apply_settings",
    "format_config",
    "load_config_file",
    "parse_config_text",
    "AP_EPSILON_LIMIT",
    "KINETIC_NOTE",
    "APReport",
    "ConvergenceTable",
    "ap_check",
    "l1_norm",
    "observed_order",
    "restrict",
    "spatial_convergence",
    "temporal_convergence",
    "build_parser",
    "main",
    "resolve_config",
    "CSV_HEADER",
    "csv_filename",
    "read_profile_csv",
    "write_profile_csv",
    "write_report",
    "RunReport",
    "RunResult",
    "Snapshot",
    "run_scenario",
]
