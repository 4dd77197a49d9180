"""
Fourth-order explicit Runge-Kutta integration of the unpenalized parity system,
the reference for kinetic-regime runs

    φ_t = -Γ(ψ, φ, 1/ε) + E(ψ_v - 2vψ) + G + Q̃(φ)/ε²
    ψ_t = -[λψ + Γ(φ, ψ, ε) - E(φ_v - 2vφ)]/ε²

Both equations use the upwind viscosities of f = φ + εψ transported at speed v/ε.
"""
import dataclasses
import logging

import jax.numpy as jnp

from ..collision import apply_Q
from ..errors import NumericalFailure
from ..imex import ParityState, StepContext, field_term, implicit_psi_rhs, make_state
from ..scenarios import ScenarioConfig, build_problem, initialize, with_overrides
from ..spatial import ViscosityPair, stencil_radius, transport_divergence, trim
from ..utils import check_finite
from .drift_diffusion import ReferenceResult, march

logger = logging.getLogger(__name__)


def kinetic_rhs(context: StepContext, phi, psi, field):
    """
    :param context: Step context with μ = 0
    :param phi: Interior φ
    :param psi: Interior ψ
    :param field: Electric field
    :return: (φ_t, ψ_t)
    """
    grid, basis = context.grid, context.basis
    padded = context.ghosts.fill(phi, psi, field)
    transport = transport_divergence(
        grid, basis.nodes, padded.psi, padded.phi, context.viscosities.alpha_v, context.weno_order
    )
    transport = trim(transport, grid.ghost - stencil_radius(context.weno_order))
    dphi = (
        -transport
        + field_term(basis, psi, field.efield)
        + context.source[:, None]
        + apply_Q(context.kernel, basis, phi) / context.epsilon**2
    )
    return dphi, implicit_psi_rhs(context, padded, phi, psi, field)


def rk4_step(state: ParityState, dt: float, context: StepContext) -> ParityState:
    """
    Classical RK4 step

    :param state: Current state
    :param dt: Time step, hyperbolic CFL
    :param context: Step context with μ = 0
    :return: New state
    """
    basis = context.basis

    def rhs(phi, psi):
        return kinetic_rhs(context, phi, psi, context.field.evaluate(phi @ basis.weights))

    k1 = rhs(state.phi, state.psi)
    k2 = rhs(state.phi + 0.5 * dt * k1[0], state.psi + 0.5 * dt * k1[1])
    k3 = rhs(state.phi + 0.5 * dt * k2[0], state.psi + 0.5 * dt * k2[1])
    k4 = rhs(state.phi + dt * k3[0], state.psi + dt * k3[1])
    phi = state.phi + dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0])
    psi = state.psi + dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])
    return make_state(basis, phi, psi, state.time + dt)


def kinetic_context(config: ScenarioConfig) -> StepContext:
    """
    Step context of the explicit reference: μ = 0, kinetic walls, upwind viscosities

    :param config: Scenario configuration
    :return: StepContext
    """
    problem = build_problem(with_overrides(config, mu=0.0))
    eps = config.epsilon
    # the ψ equation dissipates with ε, the φ equation with 1/ε
    return dataclasses.replace(problem.context, viscosities=ViscosityPair(alpha_u=eps, alpha_v=1.0 / eps))


def reference_time_step(epsilon: float, dx: float, vmax: float, relaxation: float, c_h: float = 0.5) -> float:
    """
    RK4 step bounded by both the transport and the relaxation of the reference system

    The hyperbolic bound c_H ε Δx / vmax ignores the λ/ε² decay of ψ, which dominates
    as soon as ε < Δx; the second bound keeps the fastest decay rate, together with
    the upwind dissipation of ψ, inside the real stability interval of RK4.

    :param epsilon: Knudsen number
    :param dx: Cell width
    :param vmax: Largest velocity node
    :param relaxation: Largest collision frequency
    :param c_h: Hyperbolic CFL constant
    :return: Δt
    """
    hyperbolic = c_h * epsilon * dx / vmax
    stiff = 2.5 / (relaxation / epsilon**2 + 2.0 * vmax / (epsilon * dx))
    return min(hyperbolic, stiff)


def kinetic_reference_run(config: ScenarioConfig, nx: int = None) -> ReferenceResult:
    """
    Integrates a scenario with RK4 at the step of reference_time_step

    :param config: Scenario configuration
    :param nx: Grid override
    :return: ReferenceResult
    :raises NumericalFailure: When the reference solution is not finite
    """
    config = with_overrides(config, nx=nx)
    context = kinetic_context(config)
    grid, basis = context.grid, context.basis
    relaxation = float(jnp.max(context.kernel.collision_frequency))
    dt_max = reference_time_step(config.epsilon, grid.dx, basis.vmax, relaxation, config.c_h)
    logger.info("kinetic reference %s nx=%d dt=%g", config.name, grid.nx, dt_max)

    state = initialize(config, basis, grid, context)
    times, states = march(state, config.t_final, config.output_times, dt_max, lambda s, dt: rk4_step(s, dt, context))
    for time, snapshot in zip(times, states):
        if not check_finite(snapshot.phi, snapshot.psi):
            raise NumericalFailure("Kinetic reference solution is not finite", time=time)
    return ReferenceResult(grid.centers, times, tuple(s.rho for s in states))
