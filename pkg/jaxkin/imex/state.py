"""Evolving unknowns of the parity system"""
from dataclasses import dataclass

import jax
import jax.numpy as jnp

from ..utils import check_finite, check_shape
from ..velocity import GaussHermiteBasis, density


@dataclass(frozen=True)
class ParityState:
    """
    Nodal values of φ = r/M and ψ = j/M on the (x, v) grid at a given time

    ``rho`` caches Σ_j w_j φ_j; build states with ``make_state`` to keep it consistent.
    """

    phi: jax.Array
    psi: jax.Array
    time: float
    rho: jax.Array

    @property
    def shape(self):
        """
        :return: (nx, nv)
        """
        return self.phi.shape

    def is_finite(self) -> bool:
        """
        :return: True when φ and ψ contain no NaN or infinity
        """
        return check_finite(self.phi, self.psi)


def make_state(basis: GaussHermiteBasis, phi: jax.Array, psi: jax.Array, time: float = 0.0) -> ParityState:
    """
    :param basis: Velocity basis
    :param phi: φ, shape (nx, nv)
    :param psi: ψ, shape (nx, nv)
    :param time: Current time
    :return: ParityState with the density cached
    :raises ValueError: When phi and psi differ in shape or are not two dimensional
    """
    phi = jnp.asarray(phi)
    psi = jnp.asarray(psi)
    if not check_shape(phi, psi) or phi.ndim != 2:
        raise ValueError(f"phi and psi must share an (nx, nv) shape, got {phi.shape} and {psi.shape}")
    return ParityState(phi, psi, float(time), density(basis, phi))


def current_density(basis: GaussHermiteBasis, state: ParityState, epsilon: float) -> jax.Array:
    """
    Particle current J = ε Σ_j w_j v_j ψ_j

    :param basis: Velocity basis
    :param state: Parity state
    :param epsilon: Knudsen number
    :return: J at the cell centres
    """
    return epsilon * (state.psi @ (basis.weights * basis.nodes))
