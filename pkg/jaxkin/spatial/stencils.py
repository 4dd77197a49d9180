"""Finite-difference stencils: interior second derivative and wall-biased formulas"""
from functools import lru_cache
from typing import Optional, Tuple

import jax
import jax.numpy as jnp
import numpy as np

from .grid import SpatialGrid

_SECOND_DERIVATIVE = {
    2: np.array([1.0, -2.0, 1.0]),
    4: np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0,
}

CLOSURES = ("periodic", "dirichlet", "neumann")


def _second_coeffs(order: int) -> np.ndarray:
    if order not in _SECOND_DERIVATIVE:
        raise ValueError(f"Unsupported Laplacian order {order}, expected 2 or 4")
    return _SECOND_DERIVATIVE[order]


def second_derivative(grid: SpatialGrid, padded: jax.Array, order: int = 2) -> jax.Array:
    """
    Central second derivative at the interior cells

    :param grid: Spatial grid
    :param padded: Field with grid.ghost cells on each side
    :param order: 2 or 4
    :return: Array with nx rows
    """
    coeffs = _second_coeffs(order)
    half = len(coeffs) // 2
    g = grid.ghost
    if padded.shape[0] != grid.padded_size:
        raise ValueError(f"Expected {grid.padded_size} rows, got {padded.shape[0]}")
    if g < half:
        raise ValueError(f"Laplacian of order {order} needs {half} ghost cells, grid has {g}")
    nx = grid.nx
    out = sum(c * padded[g + o : g + o + nx] for c, o in zip(coeffs, range(-half, half + 1)))
    return out / grid.dx**2


def laplacian_matrix(nx: int, dx: float, order: int = 2, closure: str = "dirichlet") -> jax.Array:
    """
    Dense second-derivative matrix on the nx interior cells

    Ghost cells are folded back into the matrix: "dirichlet" uses the odd
    reflection ghost = 2 w - u (the wall part w goes to the right hand side via
    laplacian_wall_term), "neumann" the even reflection ghost = u, "periodic" wraps.

    :param nx: Number of cells
    :param dx: Cell width
    :param order: 2 or 4
    :param closure: One of CLOSURES
    :return: (nx, nx) matrix
    """
    if closure not in CLOSURES:
        raise ValueError(f"Unknown closure {closure!r}, expected one of {CLOSURES}")
    coeffs = _second_coeffs(order)
    half = len(coeffs) // 2
    mat = np.zeros((nx, nx))
    for i in range(nx):
        for c, o in zip(coeffs, range(-half, half + 1)):
            j = i + o
            if 0 <= j < nx:
                mat[i, j] += c
            elif closure == "periodic":
                mat[i, j % nx] += c
            else:
                mirror = -j - 1 if j < 0 else 2 * nx - 1 - j
                mat[i, mirror] += c if closure == "neumann" else -c
    return jnp.asarray(mat / dx**2)


def laplacian_wall_term(grid: SpatialGrid, left: jax.Array, right: jax.Array, order: int = 2) -> jax.Array:
    """
    Wall contribution of the odd-reflection ghosts to the second derivative

    Completes laplacian_matrix(..., closure="dirichlet"): the full second derivative
    of the reflected field is matrix @ u + laplacian_wall_term(...).

    :param grid: Spatial grid
    :param left: Wall value at x_lo (scalar or trailing shape)
    :param right: Wall value at x_hi
    :param order: 2 or 4
    :return: Array with nx rows, zero away from the walls
    """
    left = jnp.asarray(left)
    g = grid.ghost
    padded = jnp.zeros((grid.padded_size,) + left.shape)
    padded = padded.at[:g].set(2.0 * left).at[g + grid.nx :].set(2.0 * jnp.asarray(right))
    return second_derivative(grid, padded, order)


@lru_cache(maxsize=None)
def wall_weights(order: int, derivative: int, with_wall: bool) -> Tuple[float, ...]:
    """
    Weights of a one-sided formula evaluated at a wall

    Nodes sit at distances 0.5, 1.5, ... cell widths from the wall, preceded by
    the wall itself when ``with_wall``. The formula is exact for polynomials of
    degree order + derivative - 1.

    :param order: Accuracy order
    :param derivative: 0 for a value, 1 for a gradient
    :param with_wall: Whether the wall value is one of the nodes
    :return: Weights in node order (wall first), per unit cell width
    """
    n_nodes = order + derivative
    offsets = np.arange(n_nodes) + 0.5
    if with_wall:
        offsets = np.concatenate([[0.0], offsets[:-1]])
    vandermonde = np.vander(offsets, n_nodes, increasing=True).T
    target = np.zeros(n_nodes)
    target[derivative] = float(np.prod(np.arange(1, derivative + 1)))
    return tuple(np.linalg.solve(vandermonde, target))


def _inward(field: jax.Array, side: str, count: int) -> jax.Array:
    if side == "left":
        return field[:count]
    if side == "right":
        return field[-count:][::-1]
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def wall_extrapolation(field: jax.Array, side: str, order: int = 2) -> jax.Array:
    """
    Value at a wall extrapolated from the closest interior cells

    :param field: Interior values, space on axis 0
    :param side: "left" or "right"
    :param order: Number of cells used
    :return: Wall value, shape field.shape[1:]
    """
    weights = wall_weights(order, 0, False)
    values = _inward(field, side, order)
    return jnp.tensordot(jnp.asarray(weights), values, axes=1)


def one_sided_gradient(
    grid: SpatialGrid, field: jax.Array, side: str, order: int = 2, wall_value: Optional[jax.Array] = None
) -> jax.Array:
    """
    Spatial derivative at a wall from interior cells, optionally using the wall value

    :param grid: Spatial grid
    :param field: Interior values, space on axis 0
    :param side: "left" or "right"
    :param order: Accuracy order
    :param wall_value: Value at the wall, if known
    :return: d field / dx at the wall
    :raises ValueError: When side is unknown or the field has too few cells for the order
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    needed = order if wall_value is not None else order + 1
    if jnp.shape(field)[0] < needed:
        raise ValueError(f"Gradient of order {order} needs {needed} interior cells, got {jnp.shape(field)[0]}")
    weights = jnp.asarray(wall_weights(order, 1, wall_value is not None))
    sign = 1.0 if side == "left" else -1.0
    if wall_value is None:
        grad = jnp.tensordot(weights, _inward(field, side, order + 1), axes=1)
    else:
        grad = weights[0] * wall_value + jnp.tensordot(weights[1:], _inward(field, side, order), axes=1)
    return sign * grad / grid.dx
