"""
Maxwellian injection at the walls and ghost-cell filling.

Kinetic wall values are computed at the positive velocity nodes and extended to
the negative ones by parity: φ is even and ψ odd in v. The diffusive closure is
affine in φ node by node, which lets the implicit stage solve take it in. Ghost
layers are filled by odd reflection through the wall value,
ghost_k = 2 w - u_{k-1}, so that a linear profile through the wall is continued
exactly.
"""
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

import jax
import jax.numpy as jnp

from ..collision import KernelSpec
from ..field import FieldState
from ..spatial import SpatialGrid, wall_extrapolation, wall_weights
from ..velocity import GaussHermiteBasis


class BoundaryKind(str, Enum):
    """Ghost-cell policy"""

    PERIODIC = "periodic"
    INJECTION = "injection"


class InjectionData(NamedTuple):
    """
    Incoming distributions in φ-representation, F/M at the incoming nodes

    ``left`` is indexed by the v > 0 nodes (entering at x_lo), ``right`` by the mirrored
    v < 0 nodes (entering at x_hi); both are ordered by increasing |v|.
    """

    left: jax.Array
    right: jax.Array


@dataclass(frozen=True)
class BoundarySpec:
    """Boundary description of a run: ghost policy, injected values and the ψ condition"""

    kind: BoundaryKind = BoundaryKind.PERIODIC
    inflow_left: float = 1.0
    inflow_right: float = 1.0
    psi_neumann: bool = False

    def __post_init__(self):
        object.__setattr__(self, "kind", BoundaryKind(self.kind))
        if self.inflow_left < 0 or self.inflow_right < 0:
            raise ValueError("Injected distributions must be nonnegative")


class WallValues(NamedTuple):
    """Wall values of φ and ψ at every velocity node, and ∂_x φ when the closure provides it"""

    phi_left: jax.Array
    phi_right: jax.Array
    psi_left: jax.Array
    psi_right: jax.Array
    dphi_left: Optional[jax.Array] = None
    dphi_right: Optional[jax.Array] = None


def maxwellian_injection(basis: GaussHermiteBasis, left: float = 1.0, right: float = 1.0) -> InjectionData:
    """
    F_L = left M and F_R = right M

    :param basis: Velocity basis
    :param left: Multiple of M injected at x_lo
    :param right: Multiple of M injected at x_hi
    :return: InjectionData
    """
    half = basis.nv // 2
    return InjectionData(jnp.full(half, float(left)), jnp.full(half, float(right)))


def injected_density(basis: GaussHermiteBasis, injection: InjectionData):
    """
    Wall densities of the injected distributions extended evenly in v

    :return: (ρ_L, ρ_R) = Σ_j w_j F/M
    """
    w = basis.weights[basis.positive]
    return float(2.0 * jnp.sum(w * injection.left)), float(2.0 * jnp.sum(w * injection.right))


def _even(positive: jax.Array) -> jax.Array:
    return jnp.concatenate([positive[::-1], positive], axis=-1)


def _odd(positive: jax.Array) -> jax.Array:
    return jnp.concatenate([-positive[::-1], positive], axis=-1)


def apply_kinetic_bc(
    phi: jax.Array,
    psi: jax.Array,
    injection: InjectionData,
    basis: GaussHermiteBasis,
    epsilon: float,
    order: int = 2,
) -> WallValues:
    """
    Kinetic injection: the incoming f = φ + εψ equals F, the outgoing one is
    extrapolated from the interior

    At x_lo and a node v > 0 the outgoing value is f(-v) = φ(v) - εψ(v), so
    φ_w = (F + f_out)/2 and ψ_w = (F - f_out)/(2ε); at x_hi the roles swap.

    :param phi: Interior φ, shape (nx, nv)
    :param psi: Interior ψ, shape (nx, nv)
    :param injection: Injected values
    :param basis: Velocity basis
    :param epsilon: Knudsen number
    :param order: Extrapolation order (2 linear, 3 quadratic)
    :return: WallValues
    """
    if phi.shape[0] < order:
        raise ValueError(f"Extrapolation of order {order} needs {order} interior cells, got {phi.shape[0]}")
    pos = basis.positive
    out_left = wall_extrapolation(phi[:, pos] - epsilon * psi[:, pos], "left", order)
    out_right = wall_extrapolation(phi[:, pos] + epsilon * psi[:, pos], "right", order)

    phi_left = 0.5 * (injection.left + out_left)
    psi_left = (injection.left - out_left) / (2.0 * epsilon)
    phi_right = 0.5 * (injection.right + out_right)
    psi_right = (out_right - injection.right) / (2.0 * epsilon)

    return WallValues(_even(phi_left), _even(phi_right), _odd(psi_left), _odd(psi_right))


class WallCoupling(NamedTuple):
    """
    Affine wall relation of φ, per velocity node: φ_w = offset + Σ_i gain_i φ_i

    The sum runs over the cells closest to the wall, ``gain`` having one row per
    cell counted inward from it.
    """

    offset_left: jax.Array
    offset_right: jax.Array
    gain_left: jax.Array
    gain_right: jax.Array


def diffusive_wall_coupling(
    injection: InjectionData,
    epsilon: float,
    kernel: KernelSpec,
    basis: GaussHermiteBasis,
    grid: SpatialGrid,
    e_left: float = 0.0,
    e_right: float = 0.0,
    order: int = 2,
) -> WallCoupling:
    """
    Robin closure of the injection condition solved for the wall value of φ

    At x_lo, for v > 0: φ - (εv/λ)(∂_x φ + 2 E c) = c with c = F_L/M; at x_hi the sign
    of the O(ε) term flips. ∂_x φ is the one-sided derivative through the wall value,
    so the relation is affine in the interior values. The gains do not depend on
    the field.

    :param injection: Injected values
    :param epsilon: Knudsen number (0 gives the Dirichlet condition φ_w = c)
    :param kernel: Kernel providing λ
    :param basis: Velocity basis
    :param grid: Spatial grid
    :param e_left: Electric field at x_lo
    :param e_right: Electric field at x_hi
    :param order: Accuracy of the one-sided derivative
    :return: WallCoupling extended evenly to all nodes
    """
    pos = basis.positive
    scale = epsilon * basis.nodes[pos] / kernel.collision_frequency[pos]
    weights = jnp.asarray(wall_weights(order, 1, True))
    denom = 1.0 - scale * weights[0] / grid.dx
    gain = weights[1:, None] * (scale / grid.dx)[None, :] / denom[None, :]
    offset_left = injection.left * (1.0 + 2.0 * scale * e_left) / denom
    offset_right = injection.right * (1.0 - 2.0 * scale * e_right) / denom
    return WallCoupling(_even(offset_left), _even(offset_right), _even(gain), _even(gain))


def apply_diffusive_bc(
    phi: jax.Array,
    injection: InjectionData,
    epsilon: float,
    kernel: KernelSpec,
    basis: GaussHermiteBasis,
    field: FieldState,
    grid: SpatialGrid,
    order: int = 2,
) -> WallValues:
    """
    Wall values of the Robin closure in the diffusive regime

    φ_w follows from diffusive_wall_coupling; the odd part comes from the local
    flux relation ψ_w = -(v/λ)(∂_x φ + 2 E c), evaluated at every node with its own
    sign of v.

    :param phi: Interior φ, shape (nx, nv)
    :param injection: Injected values
    :param epsilon: Knudsen number (0 gives the Dirichlet condition φ_w = c)
    :param kernel: Kernel providing λ
    :param basis: Velocity basis
    :param field: Field with wall values e_left, e_right
    :param grid: Spatial grid
    :param order: Accuracy of the one-sided derivative
    :return: WallValues, with the wall gradients of φ
    """
    if phi.shape[0] < order:
        raise ValueError(f"One-sided derivative of order {order} needs {order} interior cells, got {phi.shape[0]}")
    coupling = diffusive_wall_coupling(injection, epsilon, kernel, basis, grid, field.e_left, field.e_right, order)
    weights = jnp.asarray(wall_weights(order, 1, True))
    drift = basis.nodes / kernel.collision_frequency

    values = []
    for sign, offset, gain, inflow, efield, inward in (
        (1.0, coupling.offset_left, coupling.gain_left, injection.left, field.e_left, phi[:order]),
        (-1.0, coupling.offset_right, coupling.gain_right, injection.right, field.e_right, phi[-order:][::-1]),
    ):
        phi_w = offset + jnp.sum(gain * inward, axis=0)
        grad = sign * (weights[0] * phi_w + jnp.tensordot(weights[1:], inward, axes=1)) / grid.dx
        psi_w = -drift * (grad + 2.0 * efield * _even(inflow))
        values.append((phi_w, psi_w, grad))

    (phi_left, psi_left, grad_left), (phi_right, psi_right, grad_right) = values
    return WallValues(phi_left, phi_right, psi_left, psi_right, grad_left, grad_right)


def fill_periodic(grid: SpatialGrid, u: jax.Array) -> jax.Array:
    """
    :param grid: Spatial grid
    :param u: Interior values, space on axis 0
    :return: Padded array with wrapped ghosts
    """
    g = grid.ghost
    return jnp.concatenate([u[-g:], u, u[:g]], axis=0)


def fill_reflected(grid: SpatialGrid, u: jax.Array, left: jax.Array, right: jax.Array) -> jax.Array:
    """
    Odd reflection through the wall values, ghost_k = 2 w - u_{k-1}

    :param grid: Spatial grid
    :param u: Interior values, space on axis 0
    :param left: Wall value at x_lo
    :param right: Wall value at x_hi
    :return: Padded array
    """
    g = grid.ghost
    return jnp.concatenate([2.0 * left - u[:g][::-1], u, 2.0 * right - u[-g:][::-1]], axis=0)


def apply_flux_neumann_psi(grid: SpatialGrid, psi: jax.Array) -> jax.Array:
    """
    Zero normal derivative of ψ: even reflection of the interior

    :param grid: Spatial grid
    :param psi: Interior ψ
    :return: Padded ψ
    """
    g = grid.ghost
    return jnp.concatenate([psi[:g][::-1], psi, psi[-g:][::-1]], axis=0)
