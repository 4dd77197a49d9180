"""Run loop of the IMEX solver over a scenario"""
import logging
import time
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple

import jax
import jax.numpy as jnp
from tqdm import tqdm
from tqdm.contrib.logging import logging_redirect_tqdm

from ..boundary import BoundaryKind
from ..field import FieldState
from ..imex import ParityState, current_density, stepper_for, uniform_steps
from ..scenarios import Problem, ScenarioConfig, build_problem, initialize

logger = logging.getLogger(__name__)


class Snapshot(NamedTuple):
    """State and field at an output time"""

    time: float
    state: ParityState
    field: FieldState
    current: jax.Array


@dataclass(frozen=True)
class RunReport:
    """
    Summary of a run

    ``mass_drift`` is the relative change of the total mass net of the source, only
    defined on periodic domains. ``residuals`` holds ‖ρ^{n+1} - ρ^n‖∞/Δt per step
    when requested.
    """

    scenario: str
    scheme: str
    epsilon: float
    nx: int
    nv: int
    dt: float
    steps: int
    wall_time: float
    density: jax.Array
    mass_drift: Optional[float] = None
    error: Optional[float] = None
    residuals: Tuple[float, ...] = ()

    def lines(self):
        """
        :return: key=value lines of the scalar fields
        """
        out = [
            f"scenario={self.scenario}",
            f"scheme={self.scheme}",
            f"epsilon={self.epsilon!r}",
            f"nx={self.nx}",
            f"nv={self.nv}",
            f"dt_used={self.dt!r}",
            f"steps={self.steps}",
            f"wall_time={self.wall_time:.3f}",
        ]
        if self.mass_drift is not None:
            out.append(f"mass_drift={self.mass_drift!r}")
        if self.error is not None:
            out.append(f"error={self.error!r}")
        return out


class RunResult(NamedTuple):
    report: RunReport
    problem: Problem
    snapshots: Tuple[Snapshot, ...]


def _mass(problem: Problem, rho: jax.Array) -> float:
    return float(jnp.sum(rho) * problem.grid.dx)


def _snapshot(problem: Problem, state: ParityState, target: float) -> Snapshot:
    ctx = problem.context
    field = ctx.field.evaluate(state.rho)
    return Snapshot(target, state, field, current_density(problem.basis, state, ctx.epsilon))


def run_scenario(config: ScenarioConfig, progress: bool = False, track_residual: bool = False) -> RunResult:
    """
    Integrates a scenario to its final time

    Steps are uniform between consecutive output times; the final time is always a
    snapshot.

    :param config: Scenario configuration
    :param progress: Show a progress bar
    :param track_residual: Record the steady-state residual of every step
    :return: RunResult with the report and the snapshots
    :raises NumericalFailure: When a step produces non-finite values
    """
    problem = build_problem(config)
    stepper = stepper_for(problem.context)
    state = initialize(config, problem.basis, problem.grid, problem.context)
    dt_max = problem.time_step.dt
    logger.info(
        "run %s scheme=%s eps=%g nx=%d nv=%d dt=%g (%s) mu=%g",
        config.name,
        config.scheme,
        config.epsilon,
        config.nx,
        config.nv,
        dt_max,
        problem.time_step.rule.value,
        problem.context.mu,
    )

    targets = sorted({t for t in config.output_times if t < config.t_final} | {config.t_final})
    plan = []
    start = 0.0
    for target in targets:
        plan.append((target, *uniform_steps(target - start, dt_max)))
        start = target
    total = sum(n for _, n, _ in plan)

    mass0 = _mass(problem, state.rho)
    snapshots: List[Snapshot] = []
    residuals: List[float] = []
    steps = 0
    dt_used = 0.0
    started = time.perf_counter()
    with logging_redirect_tqdm(), tqdm(total=total, disable=not progress, desc=config.name, unit="step") as bar:
        for target, n_steps, dt in plan:
            for _ in range(n_steps):
                new = stepper.step(state, dt)
                if track_residual:
                    residuals.append(float(jnp.max(jnp.abs(new.rho - state.rho))) / dt)
                state = new
                steps += 1
                bar.update()
                logger.debug("step %d t=%.6g dt=%.6g", steps, state.time, dt)
            dt_used = max(dt_used, dt)
            snapshots.append(_snapshot(problem, state, target))
    wall = time.perf_counter() - started

    mass_drift = None
    if config.boundary.kind is BoundaryKind.PERIODIC:
        produced = config.source * (config.x_hi - config.x_lo) * state.time
        mass_drift = abs(_mass(problem, state.rho) - mass0 - produced) / max(abs(mass0), 1.0)

    report = RunReport(
        scenario=config.name,
        scheme=config.scheme,
        epsilon=config.epsilon,
        nx=config.nx,
        nv=config.nv,
        dt=dt_used,
        steps=steps,
        wall_time=wall,
        density=state.rho,
        mass_drift=mass_drift,
        residuals=tuple(residuals),
    )
    logger.info("finished %s in %d steps, %.2fs", config.name, steps, wall)
    return RunResult(report, problem, tuple(snapshots))
