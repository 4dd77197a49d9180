"""
Scalar relaxation system used to study the stability of the modified fluxes

    u_t = -(v + mu u_x)_x + mu u_xx
    eps^2 v_t = u - u_x - v

on a periodic unit interval. It shares the structure of the parity system: as
eps -> 0 it relaxes to u_t + u_x = u_xx. The step is first order and partitioned
like the kinetic scheme: explicit transport of u with v* = v + mu D_V(u, v),
implicit mu-diffusion of u, then implicit relaxation of v using the new u.
"""
import logging
import math
from enum import Enum
from typing import NamedTuple

import jax
import jax.numpy as jnp

from .fluxes import ViscosityPair, viscosity_pair
from .stencils import laplacian_matrix

logger = logging.getLogger(__name__)


class ViscosityPreset(str, Enum):
    """Numerical viscosity choices for the prototype fluxes"""

    PHYSICAL = "physical"
    MODIFIED = "modified"
    PRACTICAL = "practical"


class PrototypeHistory(NamedTuple):
    """Max-norm trajectory of a prototype run"""

    times: jax.Array
    u_max: jax.Array
    v_max: jax.Array


def prototype_viscosities(preset, epsilon: float) -> ViscosityPair:
    """
    :param preset: ViscosityPreset or its name
    :param epsilon: Relaxation parameter
    :return: (alpha_u, alpha_v) for the u and v fluxes
    """
    preset = ViscosityPreset(preset)
    if preset is ViscosityPreset.PHYSICAL:
        return ViscosityPair(1.0 / epsilon, epsilon)
    if preset is ViscosityPreset.MODIFIED:
        return ViscosityPair(1.0, epsilon**2)
    return viscosity_pair(epsilon)


@jax.jit
def _lf_divergence(h: jax.Array, k: jax.Array, alpha: float, dx: float) -> jax.Array:
    # periodic W_{i+1/2} = ((h_{i+1} + h_i) - alpha (k_{i+1} - k_i)) / 2
    flux = 0.5 * ((jnp.roll(h, -1) + h) - alpha * (jnp.roll(k, -1) - k))
    return (flux - jnp.roll(flux, 1)) / dx


def prototype_run(
    epsilon: float,
    nx: int = 100,
    cfl: float = 0.5,
    t_final: float = 0.5,
    preset="practical",
    mu: float = None,
) -> PrototypeHistory:
    """
    Integrates the prototype system from u0 = 1 + sin(2 pi x)/2, v0 = 0

    :param epsilon: Relaxation parameter
    :param nx: Number of cells
    :param cfl: Ratio dt / dx
    :param t_final: Final time
    :param preset: Viscosity preset
    :param mu: Diffusion switch, defaults to 1 if epsilon < dx else 0
    :return: PrototypeHistory, one entry per step plus the initial state
    """
    if epsilon <= 0 or nx < 3 or cfl <= 0 or t_final <= 0:
        raise ValueError("epsilon, cfl and t_final must be positive and nx at least 3")

    dx = 1.0 / nx
    if mu is None:
        mu = 1.0 if epsilon < dx else 0.0
    n_steps = math.ceil(t_final / (cfl * dx) - 1e-9)
    dt = t_final / n_steps
    alpha_u, alpha_v = prototype_viscosities(preset, epsilon)
    logger.debug("prototype eps=%g preset=%s alpha=(%g, %g) mu=%g dt=%g", epsilon, preset, alpha_u, alpha_v, mu, dt)

    x = (jnp.arange(nx) + 0.5) * dx
    u = 1.0 + 0.5 * jnp.sin(2.0 * jnp.pi * x)
    v = jnp.zeros(nx)

    eye = jnp.eye(nx)
    lap = laplacian_matrix(nx, dx, 2, "periodic")
    diffusion_inv = jnp.linalg.inv(eye - dt * mu * lap)
    relaxation_inv = jnp.linalg.inv((epsilon**2 + dt) * eye - dt * alpha_v * dx / 2.0 * lap)
    zeros = jnp.zeros(nx)

    u_max, v_max = [float(jnp.max(jnp.abs(u)))], [0.0]
    for _ in range(n_steps):
        v_star = v + mu * _lf_divergence(u, v, alpha_v, dx)
        u = diffusion_inv @ (u - dt * _lf_divergence(v_star, u, alpha_u, dx))
        v = relaxation_inv @ (epsilon**2 * v + dt * (u - _lf_divergence(u, zeros, 0.0, dx)))
        u_max.append(float(jnp.max(jnp.abs(u))))
        v_max.append(float(jnp.max(jnp.abs(v))))
        if not math.isfinite(u_max[-1]):
            break

    times = jnp.arange(len(u_max)) * dt
    return PrototypeHistory(times, jnp.asarray(u_max), jnp.asarray(v_max))
