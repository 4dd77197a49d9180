"""Doping profile and the Dirichlet Poisson problem γ Φ'' = ρ - ρ_d"""
from dataclasses import dataclass
from typing import NamedTuple

import jax
import jax.numpy as jnp
import numpy as np
from scipy.linalg import solve_banded

from ..spatial import SpatialGrid, one_sided_gradient


@dataclass(frozen=True)
class DopingProfile:
    """
    Smoothed n+ n n+ doping
    ρ_d(x) = 1 - (1 - m)/2 [tanh((x - x1)/s) - tanh((x - x2)/s)]
    """

    s: float = 0.02
    m: float = 0.001
    x1: float = 0.3
    x2: float = 0.7

    def __post_init__(self):
        if not 0.0 < self.m <= 1.0:
            raise ValueError(f"Doping minimum m must lie in (0, 1], got {self.m}")
        if not 0.0 < self.x1 < self.x2 < 1.0:
            raise ValueError(f"Junctions must satisfy 0 < x1 < x2 < 1, got {self.x1}, {self.x2}")
        if self.s <= 0.0:
            raise ValueError(f"Junction thickness s must be positive, got {self.s}")


class FieldState(NamedTuple):
    """Potential and field at the cell centres, plus the field at both walls"""

    potential: jax.Array
    efield: jax.Array
    e_left: float
    e_right: float


def doping_density(profile: DopingProfile, x: jax.Array) -> jax.Array:
    """
    :param profile: Doping parameters
    :param x: Positions in [0, 1]
    :return: ρ_d(x)
    """
    x = jnp.asarray(x)
    bump = jnp.tanh((x - profile.x1) / profile.s) - jnp.tanh((x - profile.x2) / profile.s)
    return 1.0 - 0.5 * (1.0 - profile.m) * bump


def field_from_potential(grid: SpatialGrid, potential: jax.Array, left: float, right: float) -> FieldState:
    """
    E = -Φ' by central differences, with the wall values closing the end cells

    :param grid: Spatial grid
    :param potential: Φ at the cell centres
    :param left: Φ at x_lo
    :param right: Φ at x_hi
    :return: FieldState
    """
    h = grid.dx
    grad = jnp.zeros_like(potential)
    grad = grad.at[1:-1].set((potential[2:] - potential[:-2]) / (2.0 * h))
    # three-point formula through the wall value, evaluated half a cell inside
    grad = grad.at[0].set((-4.0 / 3.0 * left + potential[0] + potential[1] / 3.0) / h)
    grad = grad.at[-1].set((4.0 / 3.0 * right - potential[-1] - potential[-2] / 3.0) / h)
    e_left = -one_sided_gradient(grid, potential, "left", 2, wall_value=left)
    e_right = -one_sided_gradient(grid, potential, "right", 2, wall_value=right)
    return FieldState(potential, -grad, float(e_left), float(e_right))


def solve_poisson(
    rho: jax.Array, gamma: float, voltage: float, profile: DopingProfile, grid: SpatialGrid
) -> FieldState:
    """
    Second-order cell-centred solve of γ Φ'' = ρ - ρ_d with Φ(x_lo) = 0, Φ(x_hi) = V

    :param rho: Density at the cell centres
    :param gamma: Scaled Debye length
    :param voltage: Applied voltage at the right wall
    :param profile: Doping profile
    :param grid: Spatial grid
    :return: FieldState with Φ and E = -Φ'
    :raises ValueError: When gamma is not positive or rho has the wrong length
    """
    if gamma <= 0:
        raise ValueError(f"gamma must be positive, got {gamma}")
    nx = grid.nx
    if jnp.shape(rho) != (nx,):
        raise ValueError(f"rho must have shape ({nx},), got {jnp.shape(rho)}")

    h = grid.dx
    rhs = np.array((rho - doping_density(profile, grid.centers)) * h**2 / gamma, dtype=np.float64)
    rhs[-1] -= 2.0 * voltage

    # ghosts by odd reflection through the wall values: Φ_{-1} = -Φ_0, Φ_nx = 2V - Φ_{nx-1}
    bands = np.zeros((3, nx))
    bands[0, 1:] = 1.0
    bands[1, :] = -2.0
    bands[1, 0] = bands[1, -1] = -3.0
    bands[2, :-1] = 1.0
    potential = jnp.asarray(solve_banded((1, 1), bands, rhs))

    return field_from_potential(grid, potential, 0.0, voltage)


def poisson_residual(
    state: FieldState, rho: jax.Array, gamma: float, voltage: float, profile: DopingProfile, grid: SpatialGrid
) -> float:
    """
    Max-norm residual of the discrete Poisson equation

    :return: max_i |γ (Φ_{i+1} - 2Φ_i + Φ_{i-1})/dx² - (ρ_i - ρ_d,i)|
    """
    phi = state.potential
    padded = jnp.concatenate([-phi[:1], phi, 2.0 * voltage - phi[-1:]])
    lap = (padded[2:] - 2.0 * padded[1:-1] + padded[:-2]) / grid.dx**2
    return float(jnp.max(jnp.abs(gamma * lap - (rho - doping_density(profile, grid.centers)))))
