"""
Scattering kernels and the collision/penalization operators in φ-representation.

Operators are evaluated in difference form, Σ_j σ_ij w_j (φ_j - φ_i), so that they
vanish exactly on velocity-independent φ. This keeps the explicit residue
(Q - L)/ε² free of roundoff blow-up when ε is tiny.
"""
from enum import Enum

import jax
import jax.numpy as jnp

from ..utils import check_last_axis, check_symmetric
from ..velocity import GaussHermiteBasis

EPI_CONSTANT = 0.1


class KernelKind(str, Enum):
    """Available scattering cross sections"""

    RTA = "rta"
    EPI = "epi"


def _epi_cross_section(v: jax.Array, w: jax.Array, constant: float) -> jax.Array:
    diff = v[:, None] ** 2 - w[None, :] ** 2
    return jnp.exp(-constant * (diff + 1.0) ** 2) + jnp.exp(-constant * (diff - 1.0) ** 2)


class KernelSpec:
    """
    Discretized scattering kernel

    Stores σ(v_i, v_j) on the velocity nodes together with the derived collision
    frequency λ_i = Σ_j σ_ij w_j and the diffusion coefficient D = Σ_j w_j v_j²/λ_j.

    # Example usage:
    basis = build_basis(16)
    kernel = build_kernel(KernelKind.EPI, basis)
    q = apply_Q(kernel, basis, phi)
    """

    def __init__(
        self,
        kind: KernelKind,
        sigma: jax.Array,
        weights: jax.Array,
        nodes: jax.Array,
        epi_constant: float = EPI_CONSTANT,
        penalty_beta: float = 1.0,
    ):
        """Kernel constructor

        Args:
            kind (KernelKind): Cross section family
            sigma (jax.Array): nv x nv cross section on the nodes
            weights (jax.Array): Quadrature weights of the basis
            nodes (jax.Array): Velocity nodes of the basis
            epi_constant (float, optional): Width constant C of the EPI kernel. Defaults to 0.1.
            penalty_beta (float, optional): Penalization rate β. Defaults to 1.0.

        Raises:
            ValueError: When σ is not symmetric or not strictly positive
            ValueError: When β or C are not positive
        """
        if penalty_beta <= 0:
            raise ValueError(f"penalty_beta must be positive, got {penalty_beta}")
        if epi_constant <= 0:
            raise ValueError(f"epi_constant must be positive, got {epi_constant}")
        if not check_symmetric(sigma, 0.0):
            raise ValueError("Cross section matrix must be symmetric")
        if not bool(jnp.all(sigma > 0)):
            raise ValueError("Cross section must be strictly positive")

        self._kind = KernelKind(kind)
        self._sigma = sigma
        self._epi_constant = float(epi_constant)
        self._penalty_beta = float(penalty_beta)
        self._lambda = sigma @ weights
        self._diffusion = float(jnp.sum(weights * nodes**2 / self._lambda))
        self._sigma_w = sigma * weights[None, :]

    @property
    def kind(self) -> KernelKind:
        """
        :return: Cross section family
        """
        return self._kind

    @property
    def sigma_matrix(self) -> jax.Array:
        """
        :return: σ(v_i, v_j)
        """
        return self._sigma

    @property
    def weighted_sigma(self) -> jax.Array:
        """
        :return: σ(v_i, v_j) w_j
        """
        return self._sigma_w

    @property
    def collision_frequency(self) -> jax.Array:
        """
        :return: λ_i
        """
        return self._lambda

    @property
    def diffusion(self) -> float:
        """
        :return: Diffusion coefficient D
        """
        return self._diffusion

    @property
    def mobility(self) -> float:
        """
        :return: Mobility η = D/θ = 2D
        """
        return 2.0 * self._diffusion

    @property
    def epi_constant(self) -> float:
        """
        :return: EPI width constant C
        """
        return self._epi_constant

    @property
    def penalty_beta(self) -> float:
        """
        :return: Penalization rate β
        """
        return self._penalty_beta


def build_kernel(
    kind, basis: GaussHermiteBasis, epi_constant: float = EPI_CONSTANT, penalty_beta: float = 1.0
) -> KernelSpec:
    """
    Builds the discretized kernel on the nodes of a basis

    :param kind: KernelKind or its name ("rta", "epi")
    :param basis: Velocity basis
    :param epi_constant: C in δ̃(x) = exp(-C x²)
    :param penalty_beta: β of the penalization L(φ) = β(ρ - φ)
    :return: KernelSpec
    """
    kind = KernelKind(kind)
    v = basis.nodes
    if kind is KernelKind.RTA:
        sigma = jnp.ones((basis.nv, basis.nv))
    else:
        sigma = _epi_cross_section(v, v, epi_constant)
        sigma = 0.5 * (sigma + sigma.T)
    return KernelSpec(kind, sigma, basis.weights, v, epi_constant, penalty_beta)


@jax.jit
def _relaxation(weighted: jax.Array, phi: jax.Array) -> jax.Array:
    # Σ_j K_ij (φ_j - φ_i) for any leading shape of phi
    return jnp.einsum("ij,...ij->...i", weighted, phi[..., None, :] - phi[..., :, None])


def apply_Q(kernel: KernelSpec, basis: GaussHermiteBasis, phi: jax.Array) -> jax.Array:
    """
    Collision operator Q̃(φ)_i = Σ_j σ_ij φ_j w_j - λ_i φ_i

    :param kernel: Kernel on the basis nodes
    :param basis: Velocity basis
    :param phi: Nodal values, velocity on the last axis
    :return: Q̃(φ) with the shape of phi
    """
    check_last_axis(phi, basis.nv, "phi")
    return _relaxation(kernel.weighted_sigma, jnp.asarray(phi))


def apply_L(phi: jax.Array, rho: jax.Array, beta: float) -> jax.Array:
    """
    Penalization operator L(φ) = β(ρ - φ)

    :param phi: Nodal values, velocity on the last axis
    :param rho: Density of phi (scalar or leading shape of phi)
    :param beta: Penalization rate
    :return: β(ρ - φ_i)
    """
    return beta * (jnp.expand_dims(jnp.asarray(rho), -1) - jnp.asarray(phi))


def penalization(basis: GaussHermiteBasis, phi: jax.Array, beta: float) -> jax.Array:
    """
    L(φ) evaluated as β Σ_j w_j (φ_j - φ_i), exactly zero on constants

    :param basis: Velocity basis
    :param phi: Nodal values, velocity on the last axis
    :param beta: Penalization rate
    :return: L(φ) with the shape of phi
    """
    check_last_axis(phi, basis.nv, "phi")
    weighted = jnp.broadcast_to(basis.weights, (basis.nv, basis.nv))
    return beta * _relaxation(weighted, jnp.asarray(phi))


def penalized_residue(kernel: KernelSpec, basis: GaussHermiteBasis, phi: jax.Array) -> jax.Array:
    """
    Explicit part Q̃(φ) - L(φ) of the penalized collision term

    Identically zero for the RTA kernel with β = 1.

    :param kernel: Kernel on the basis nodes
    :param basis: Velocity basis
    :param phi: Nodal values, velocity on the last axis
    :return: Σ_j (σ_ij - β) w_j (φ_j - φ_i)
    """
    check_last_axis(phi, basis.nv, "phi")
    weighted = (kernel.sigma_matrix - kernel.penalty_beta) * basis.weights[None, :]
    return _relaxation(weighted, jnp.asarray(phi))
