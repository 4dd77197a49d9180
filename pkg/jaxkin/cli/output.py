"""Profile CSV files and run reports"""
import logging
from pathlib import Path
from typing import Iterable, List, Union

import numpy as np

from ..scenarios import Problem
from .config import format_config

logger = logging.getLogger(__name__)

CSV_HEADER = "x,rho,potential,current"


def csv_filename(scenario: str, scheme: str, time: float) -> str:
    """
    :return: ``<scenario>_<scheme>_t<time>.csv``
    """
    return f"{scenario}_{scheme}_t{time:g}.csv"


def write_profile_csv(path: Union[str, Path], x, rho, potential, current) -> Path:
    """
    Writes one snapshot with full double precision

    :param path: Output file
    :param x: Cell centres
    :param rho: Density
    :param potential: Electrostatic potential
    :param current: Particle current
    :return: The written path
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    table = np.column_stack([np.asarray(c, dtype=np.float64) for c in (x, rho, potential, current)])
    np.savetxt(path, table, delimiter=",", header=CSV_HEADER, comments="", fmt="%.16e")
    logger.info("wrote %s", path)
    return path


def read_profile_csv(path: Union[str, Path]) -> np.ndarray:
    """
    :param path: CSV written by ``write_profile_csv``
    :return: Array of shape (nx, 4)
    """
    return np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)


def diagnostics_lines(problem: Problem) -> List[str]:
    """
    Regime and time-step diagnostics of a problem

    :param problem: Assembled problem
    :return: key=value lines
    """
    ctx, step = problem.context, problem.time_step
    return [
        f"dt_rule={step.rule.value}",
        f"dt={step.dt!r}",
        f"parabolic_bound={step.parabolic_bound!r}",
        f"parabolic_ratio={step.parabolic_ratio!r}",
        f"mu={ctx.mu!r}",
        f"alpha_u={ctx.viscosities.alpha_u!r}",
        f"alpha_v={ctx.viscosities.alpha_v!r}",
        f"laplacian_order={ctx.laplacian_order}",
    ]


def write_report(path: Union[str, Path], problem: Problem, sections: Iterable[Iterable[str]] = ()) -> Path:
    """
    Writes the effective configuration, the diagnostics and extra sections

    :param path: Output file
    :param problem: Problem of the run
    :param sections: Further groups of lines, separated by blank lines
    :return: The written path
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    blocks = [["# configuration", *format_config(problem.config)], ["# diagnostics", *diagnostics_lines(problem)]]
    blocks.extend(list(s) for s in sections)
    path.write_text("\n\n".join("\n".join(b) for b in blocks) + "\n", encoding="utf-8")
    logger.info("wrote %s", path)
    return path
