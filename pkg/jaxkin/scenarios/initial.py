"""Initial parity states of the scenarios"""
from typing import Optional

import jax
import jax.numpy as jnp

from ..imex import ParityState, StepContext, make_state, stepper_for
from ..spatial import SpatialGrid
from ..velocity import GaussHermiteBasis
from .assembly import build_problem
from .configs import InitialKind, ScenarioConfig


def initial_phi(config: ScenarioConfig, grid: SpatialGrid, nv: int) -> jax.Array:
    """
    φ0 = f0/M, independent of v

    :param config: Scenario configuration
    :param grid: Spatial grid
    :param nv: Number of velocity nodes
    :return: Array of shape (nx, nv)
    """
    if config.initial is InitialKind.MAXWELLIAN:
        profile = jnp.ones(grid.nx)
    elif config.initial is InitialKind.VACUUM:
        profile = jnp.zeros(grid.nx)
    else:
        phase = 2.0 * jnp.pi * (grid.centers - grid.x_lo) / (grid.x_hi - grid.x_lo)
        profile = 1.0 + config.initial_amplitude * jnp.sin(phase)
    return jnp.broadcast_to(profile[:, None], (grid.nx, nv))


def well_prepared_psi(context: StepContext, phi: jax.Array) -> jax.Array:
    """
    Odd parity in discrete equilibrium with φ, λψ + Γ(φ, ψ, α_u) = E(φ_v - 2vφ)

    This is ψ = -(v φ_x - E(φ_v - 2vφ))/λ up to the numerical dissipation, which is
    kept so that the first explicit stage sees no O(Δx) relaxation layer.

    :param context: Step context supplying the field, ghosts and stencils
    :param phi: Initial φ
    :return: ψ0
    """
    return stepper_for(context).equilibrium_psi(phi)


def initialize(
    config: ScenarioConfig, basis: GaussHermiteBasis, grid: SpatialGrid, context: Optional[StepContext] = None
) -> ParityState:
    """
    :param config: Scenario configuration
    :param basis: Velocity basis
    :param grid: Spatial grid
    :param context: Step context, built from the configuration when omitted
    :return: ParityState at t = 0
    """
    phi = initial_phi(config, grid, basis.nv)
    psi = jnp.zeros_like(phi)
    if config.well_prepared:
        if context is None:
            context = build_problem(config).context
        psi = well_prepared_psi(context, phi)
    return make_state(basis, phi, psi)
