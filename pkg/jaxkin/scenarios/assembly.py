"""Turns a ScenarioConfig into the discrete objects of a run"""
import dataclasses
import logging
from typing import NamedTuple

import jax.numpy as jnp

from ..boundary import GhostFiller
from ..collision import KernelSpec, build_kernel
from ..field import ElectricField
from ..imex import SCHEME_ORDER, StepContext, TimeStep, diffusion_switch, get_tableau, time_step
from ..spatial import SpatialGrid, build_grid, viscosity_pair
from ..velocity import GaussHermiteBasis, build_basis
from .configs import ScenarioConfig

logger = logging.getLogger(__name__)


class Problem(NamedTuple):
    """Everything needed to advance a scenario"""

    config: ScenarioConfig
    basis: GaussHermiteBasis
    kernel: KernelSpec
    grid: SpatialGrid
    context: StepContext
    time_step: TimeStep


def stencil_orders(scheme: str):
    """
    Laplacian and wall-extrapolation orders matched to the scheme

    :param scheme: Tableau name
    :return: (laplacian order, boundary order)
    """
    if SCHEME_ORDER[scheme] >= 3:
        return 4, 3
    return 2, 2


def build_problem(config: ScenarioConfig) -> Problem:
    """
    :param config: Scenario configuration
    :return: Problem with the step context and the time step of the run
    """
    basis = build_basis(config.nv)
    kernel = build_kernel(config.kernel, basis, config.epi_constant, config.penalty_beta)
    grid = build_grid(config.nx, config.x_lo, config.x_hi, config.weno_order)
    epsilon = config.epsilon

    mu = diffusion_switch(epsilon, grid.dx) if config.mu is None else float(config.mu)
    laplacian_order, boundary_order = stencil_orders(config.scheme)
    ghosts = GhostFiller(config.boundary, grid, basis, kernel, epsilon, diffusive=mu > 0, order=boundary_order)

    step = time_step(epsilon, grid.dx, basis.vmax, config.c_h, config.c_m)
    if config.dt is not None:
        step = step._replace(dt=config.dt)

    context = StepContext(
        basis=basis,
        kernel=kernel,
        grid=grid,
        viscosities=viscosity_pair(epsilon),
        field=ElectricField(config.field, grid),
        source=jnp.full(grid.nx, config.source),
        mu=mu,
        epsilon=epsilon,
        tableau=get_tableau(config.scheme),
        ghosts=ghosts,
        weno_order=config.weno_order,
        laplacian_order=laplacian_order,
    )
    logger.debug(
        "assembled %s: nx=%d nv=%d mu=%g dt=%g (%s)", config.name, grid.nx, basis.nv, mu, step.dt, step.rule.value
    )
    return Problem(config, basis, kernel, grid, context, step)


def with_overrides(config: ScenarioConfig, **overrides) -> ScenarioConfig:
    """
    :param config: Base configuration
    :param overrides: Field values to replace, None values are ignored
    :return: New configuration
    """
    return dataclasses.replace(config, **{k: v for k, v in overrides.items() if v is not None})
