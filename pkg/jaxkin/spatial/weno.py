"""
Finite-difference WENO reconstruction of interface values from point values.

Jiang-Shu weights, ω_k ∝ d_k / (ε + β_k)², with coefficient tables for the
third-order (two candidate stencils) and fifth-order (three candidate stencils)
variants. The right-biased value at x_{i+1/2} is the left-biased formula applied
to the mirrored stencil.
"""
from functools import partial

import jax
import jax.numpy as jnp
import numpy as np

WENO_EPS = 1e-6

_WENO3 = (
    np.array([[-0.5, 1.5, 0.0], [0.0, 0.5, 0.5]]),
    (np.array([[-1.0, 1.0, 0.0], [0.0, -1.0, 1.0]]),),
    np.array([1.0 / 3.0, 2.0 / 3.0]),
)

_WENO5 = (
    np.array([[2.0, -7.0, 11.0, 0.0, 0.0], [0.0, -1.0, 5.0, 2.0, 0.0], [0.0, 0.0, 2.0, 5.0, -1.0]]) / 6.0,
    (
        np.sqrt(13.0 / 12.0)
        * np.array([[1.0, -2.0, 1.0, 0.0, 0.0], [0.0, 1.0, -2.0, 1.0, 0.0], [0.0, 0.0, 1.0, -2.0, 1.0]]),
        0.5 * np.array([[1.0, -4.0, 3.0, 0.0, 0.0], [0.0, 1.0, 0.0, -1.0, 0.0], [0.0, 0.0, 3.0, -4.0, 1.0]]),
    ),
    np.array([0.1, 0.6, 0.3]),
)

_TABLES = {3: _WENO3, 5: _WENO5}


def stencil_radius(order: int) -> int:
    """
    Number of cells a reconstruction reaches on each side of a cell

    :param order: WENO order, 3 or 5
    :return: 2 for WENO3, 3 for WENO5
    :raises ValueError: For unsupported orders
    """
    if order not in _TABLES:
        raise ValueError(f"Unsupported WENO order {order}, expected 3 or 5")
    return (order + 1) // 2


def _reconstruct(stencil: jax.Array, order: int) -> jax.Array:
    coeffs, smoothness, linear = _TABLES[order]
    candidates = jnp.tensordot(coeffs, stencil, axes=1)
    beta = sum(jnp.tensordot(b, stencil, axes=1) ** 2 for b in smoothness)
    shape = (-1,) + (1,) * (stencil.ndim - 1)
    alpha = linear.reshape(shape) / (WENO_EPS + beta) ** 2
    return jnp.sum(alpha * candidates, axis=0) / jnp.sum(alpha, axis=0)


@partial(jax.jit, static_argnames=("order",))
def weno_interface_values(u: jax.Array, order: int = 3):
    """
    Left- and right-biased WENO values at every interface with a full stencil

    For an array of N rows the interfaces are x_{m+1/2}, m = r-1, ..., N-r-1,
    r being the stencil radius.

    :param u: Point values, space on axis 0
    :param order: WENO order, 3 or 5
    :return: (left_biased, right_biased), each with N - 2r + 1 rows
    """
    r = stencil_radius(order)
    n_faces = u.shape[0] - 2 * r + 1
    width = 2 * r - 1
    left = jnp.stack([u[t : t + n_faces] for t in range(width)])
    right = jnp.stack([u[width - t : width - t + n_faces] for t in range(width)])
    return _reconstruct(left, order), _reconstruct(right, order)
