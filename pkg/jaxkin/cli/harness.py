"""
Verification harness: self-convergence orders and asymptotic-preserving checks

Orders are measured without an exact solution: with solutions u_0, u_1, ... on
successively halved steps (or doubled grids), e_k = ‖u_k - u_{k+1}‖ and the
observed order is log2(e_k / e_{k+1}).
"""
import logging
import math
from typing import List, NamedTuple, Sequence, Tuple

import jax
import jax.numpy as jnp

from ..errors import ConfigurationError
from ..field import FieldMode
from ..imex import uniform_steps
from ..refsolver import dd_run, kinetic_reference_run
from ..scenarios import ScenarioConfig, build_problem, with_overrides
from .runner import run_scenario

logger = logging.getLogger(__name__)

AP_EPSILON_LIMIT = 1e-4
KINETIC_NOTE = "kinetic regime, AP check not meaningful"


class ConvergenceTable(NamedTuple):
    """Self-convergence study of one scheme at one ε"""

    scheme: str
    epsilon: float
    mode: str
    levels: Tuple[float, ...]
    errors: Tuple[float, ...]
    orders: Tuple[float, ...]

    def lines(self) -> List[str]:
        """
        :return: Human readable table rows
        """
        head = f"# scheme={self.scheme} epsilon={self.epsilon:g} mode={self.mode}"
        rows = [head, "level,error,order"]
        for k, error in enumerate(self.errors):
            order = self.orders[k - 1] if k > 0 else float("nan")
            rows.append(f"{self.levels[k]:.6g},{error:.6e},{order:.3f}")
        return rows


class APReport(NamedTuple):
    """Comparison of the IMEX density with a reference density"""

    scenario: str
    epsilon: float
    nx: int
    oracle: str
    l1: float
    linf: float
    meaningful: bool
    note: str = ""
    residuals: Tuple[float, ...] = ()

    def lines(self) -> List[str]:
        """
        :return: key=value lines
        """
        out = [
            f"scenario={self.scenario}",
            f"epsilon={self.epsilon!r}",
            f"nx={self.nx}",
            f"oracle={self.oracle}",
            f"l1={self.l1!r}",
            f"linf={self.linf!r}",
        ]
        if self.note:
            out.append(f"note={self.note}")
        return out


def observed_order(errors: Sequence[float]) -> Tuple[float, ...]:
    """
    :param errors: Differences between successive refinements
    :return: log2 of successive error ratios
    """
    return tuple(math.log2(a / b) if a > 0 and b > 0 else float("nan") for a, b in zip(errors[:-1], errors[1:]))


def l1_norm(values: jax.Array, dx: float) -> float:
    """
    :return: Σ|values| Δx
    """
    return float(jnp.sum(jnp.abs(values)) * dx)


def restrict(fine: jax.Array) -> jax.Array:
    """
    Averages pairs of cells of a grid refined by two

    :param fine: Cell values on 2N cells
    :return: Cell averages on N cells
    """
    return 0.5 * (fine[0::2] + fine[1::2])


def temporal_convergence(config: ScenarioConfig, levels: int = 4) -> ConvergenceTable:
    """
    Halves the time step ``levels - 1`` times on a fixed grid

    :param config: Scenario configuration
    :param levels: Number of runs, at least 3
    :return: ConvergenceTable indexed by Δt
    :raises ConfigurationError: With fewer than 3 levels
    """
    if levels < 3:
        raise ConfigurationError(f"a convergence study needs at least 3 levels, got {levels}")
    base = config.dt if config.dt is not None else build_problem(config).time_step.dt
    n0, _ = uniform_steps(config.t_final, base)
    steps = tuple(config.t_final / (n0 * 2**k) for k in range(levels))
    densities = [run_scenario(with_overrides(config, dt=dt, output_times=())).report.density for dt in steps]
    errors = tuple(l1_norm(a - b, config.dx) for a, b in zip(densities[:-1], densities[1:]))
    table = ConvergenceTable(config.scheme, config.epsilon, "time", steps[:-1], errors, observed_order(errors))
    logger.info("temporal orders %s eps=%g: %s", config.scheme, config.epsilon, table.orders)
    return table


def spatial_convergence(config: ScenarioConfig, resolutions: Sequence[int]) -> ConvergenceTable:
    """
    Runs on grids doubled at each level; fine solutions are restricted by pair averages

    :param config: Scenario configuration
    :param resolutions: Increasing cell counts, each twice the previous
    :return: ConvergenceTable indexed by Δx
    :raises ConfigurationError: With fewer than 3 resolutions or a ratio other than 2
    """
    resolutions = list(resolutions)
    if len(resolutions) < 3:
        raise ConfigurationError(f"a convergence study needs at least 3 resolutions, got {len(resolutions)}")
    if any(b != 2 * a for a, b in zip(resolutions[:-1], resolutions[1:])):
        raise ConfigurationError(f"resolutions must double at each level, got {resolutions}")
    densities = [run_scenario(with_overrides(config, nx=n, output_times=())).report.density for n in resolutions]
    errors = tuple(
        l1_norm(coarse - restrict(fine), (config.x_hi - config.x_lo) / n)
        for n, coarse, fine in zip(resolutions, densities[:-1], densities[1:])
    )
    widths = tuple((config.x_hi - config.x_lo) / n for n in resolutions[:-1])
    table = ConvergenceTable(config.scheme, config.epsilon, "space", widths, errors, observed_order(errors))
    logger.info("spatial orders %s eps=%g: %s", config.scheme, config.epsilon, table.orders)
    return table


def ap_check(config: ScenarioConfig) -> APReport:
    """
    Compares the IMEX density at the final time with the drift-diffusion oracle

    For ε above the asymptotic threshold the check is flagged as not meaningful
    and the explicit kinetic reference is used instead. Test 3 also records the
    steady-state residual of every step.

    :param config: Scenario configuration
    :return: APReport
    """
    meaningful = config.epsilon <= AP_EPSILON_LIMIT
    track = config.field.mode is FieldMode.POISSON
    result = run_scenario(with_overrides(config, output_times=()), track_residual=track)
    if meaningful:
        oracle, reference = "drift_diffusion", dd_run(config).final
        note = ""
    else:
        logger.warning("ap-check at eps=%g: %s", config.epsilon, KINETIC_NOTE)
        oracle, reference = "kinetic_rk4", kinetic_reference_run(config).final
        note = KINETIC_NOTE
    diff = result.report.density - reference
    report = APReport(
        scenario=config.name,
        epsilon=config.epsilon,
        nx=config.nx,
        oracle=oracle,
        l1=l1_norm(diff, config.dx),
        linf=float(jnp.max(jnp.abs(diff))),
        meaningful=meaningful,
        note=note,
        residuals=result.report.residuals,
    )
    logger.info("ap-check %s against %s: L1=%.3e Linf=%.3e", config.name, oracle, report.l1, report.linf)
    return report
