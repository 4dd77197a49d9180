"""Conservative transport operator with numerical viscosity"""
from functools import partial
from typing import NamedTuple, Union

import jax
import jax.numpy as jnp

from .grid import SpatialGrid
from .weno import stencil_radius, weno_interface_values


class ViscosityPair(NamedTuple):
    """Numerical viscosities of the odd (u) and even (v) transport terms"""

    alpha_u: float
    alpha_v: float


def viscosity_pair(epsilon: float) -> ViscosityPair:
    """
    Viscosities that keep the scheme stable in both regimes:
    alpha_u = min(1/eps, 1) and alpha_v = min(eps, eps^2)

    :param epsilon: Knudsen number
    :return: ViscosityPair
    """
    if epsilon <= 0.0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    return ViscosityPair(min(1.0 / epsilon, 1.0), min(epsilon, epsilon**2))


@partial(jax.jit, static_argnames=("order",))
def _divergence(h, k, velocities, alpha, dx, order):
    r = stencil_radius(order)
    n_faces = h.shape[0] - 2 * r + 1
    left, right = weno_interface_values(h, order)
    jump = k[r : r + n_faces] - k[r - 1 : r - 1 + n_faces]
    flux = 0.5 * velocities * (left + right) - 0.5 * alpha * jnp.abs(velocities) * jump
    return (flux[1:] - flux[:-1]) / dx


def transport_divergence(
    grid: SpatialGrid,
    velocities: Union[jax.Array, float],
    h: jax.Array,
    k: jax.Array,
    alpha: float,
    order: int = 3,
) -> jax.Array:
    """
    Flux difference (H_{i+1/2} - H_{i-1/2}) / dx with
    H_{i+1/2} = v (h^-_{i+1/2} + h^+_{i+1/2}) / 2 - alpha |v| (k_{i+1} - k_i) / 2

    The transported field h is reconstructed with WENO on both sides of each
    interface; the dissipation acts on k. Inputs may carry any symmetric
    extension of at least one stencil radius around the nx interior cells,
    and the output loses one radius on each side.

    :param grid: Spatial grid
    :param velocities: Node velocities broadcast along the last axis
    :param h: Transported field, space on axis 0
    :param k: Dissipated field, same shape as h
    :param alpha: Numerical viscosity
    :param order: WENO order, 3 or 5
    :return: Divergence with h.shape[0] - 2r rows
    """
    r = stencil_radius(order)
    if h.shape != k.shape:
        raise ValueError(f"Transported and dissipated fields differ in shape: {h.shape} vs {k.shape}")
    extension = h.shape[0] - grid.nx
    if extension < 2 * r or extension % 2:
        raise ValueError(f"Transport needs {r} extra cells per side, got {extension / 2}")
    return _divergence(h, k, jnp.asarray(velocities), alpha, grid.dx, order)
