"""
Gauss-Hermite velocity discretization.

With 2θ = 1 the absolute maxwellian M(v) = π^{-1/2} exp(-v²) is exactly the
(normalized) Gauss-Hermite weight, so the quadrature weights absorb M and the
unknowns are stored as nodal values of φ = r/M and ψ = j/M.
"""
import math

import jax
import jax.numpy as jnp
from jax.scipy.stats.norm import pdf

from ..utils import check_last_axis

THETA = 0.5


@jax.jit
def maxwellian(v):
    """
    Absolute maxwellian with temperature θ = 1/2

    :param v: Velocity value(s)
    :return: π^{-1/2} exp(-v²)
    """
    return pdf(v, scale=math.sqrt(THETA))


def orthonormal_hermite(v: jax.Array, degree: int) -> jax.Array:
    """
    Hermite polynomials orthonormal against the maxwellian weight

    Uses the three-term recurrence
    H̃_{k+1} = sqrt(2/(k+1)) v H̃_k - sqrt(k/(k+1)) H̃_{k-1}.

    :param v: Evaluation points, shape (n,)
    :param degree: Highest polynomial degree
    :return: Array of shape (degree + 1, n) with H̃_0 ... H̃_degree
    """
    v = jnp.asarray(v)
    rows = [jnp.ones_like(v)]
    if degree >= 1:
        rows.append(math.sqrt(2.0) * v)
    for k in range(1, degree):
        rows.append(math.sqrt(2.0 / (k + 1)) * v * rows[k] - math.sqrt(k / (k + 1)) * rows[k - 1])
    return jnp.stack(rows)


def _gauss_hermite_rule(nv: int):
    # Golub-Welsch: eigenvalues of the Jacobi matrix of the orthonormal family
    off = jnp.sqrt(jnp.arange(1, nv, dtype=jnp.float64) / 2.0)
    jacobi = jnp.diag(off, 1) + jnp.diag(off, -1)
    nodes = jnp.linalg.eigh(jacobi)[0]

    # one Newton sweep on H̃_nv polishes the eigenvalues
    table = orthonormal_hermite(nodes, nv)
    nodes = nodes - table[nv] / (math.sqrt(2.0 * nv) * table[nv - 1])

    nodes = jnp.sort(nodes)
    nodes = 0.5 * (nodes - nodes[::-1])

    # Christoffel numbers of the normalized weight
    table = orthonormal_hermite(nodes, nv - 1)
    weights = 1.0 / jnp.sum(table**2, axis=0)
    weights = 0.5 * (weights + weights[::-1])
    return nodes, weights / jnp.sum(weights)


class GaussHermiteBasis:
    """
    Gauss-Hermite velocity basis

    Holds the velocity nodes, the quadrature weights (which integrate against
    the maxwellian) and the nodal velocity-differentiation matrix
    deriv_coeffs[i, j] = c_j(v_i).

    # Example usage:
    basis = build_basis(16)
    rho = density(basis, phi)
    """

    def __init__(self, nodes: jax.Array, weights: jax.Array, deriv_coeffs: jax.Array):
        """Basis constructor

        Args:
            nodes (jax.Array): Velocity nodes sorted increasingly, symmetric about 0
            weights (jax.Array): Quadrature weights summing to one
            deriv_coeffs (jax.Array): nv x nv differentiation matrix

        Raises:
            ValueError: When the arrays have inconsistent sizes
        """
        nodes = jnp.asarray(nodes)
        weights = jnp.asarray(weights)
        deriv_coeffs = jnp.asarray(deriv_coeffs)
        nv = nodes.shape[0]

        if weights.shape != (nv,) or deriv_coeffs.shape != (nv, nv):
            raise ValueError("nodes, weights and deriv_coeffs must describe the same number of nodes")

        self._nodes = nodes
        self._weights = weights
        self._deriv_coeffs = deriv_coeffs
        self._nv = nv

    @property
    def nv(self) -> int:
        """
        :return: Number of velocity nodes
        """
        return self._nv

    @property
    def nodes(self) -> jax.Array:
        """
        :return: Velocity nodes v_j
        """
        return self._nodes

    @property
    def weights(self) -> jax.Array:
        """
        :return: Quadrature weights w_j (maxwellian absorbed)
        """
        return self._weights

    @property
    def deriv_coeffs(self) -> jax.Array:
        """
        :return: Differentiation matrix c_j(v_i)
        """
        return self._deriv_coeffs

    @property
    def vmax(self) -> float:
        """
        :return: Largest absolute node
        """
        return float(jnp.max(jnp.abs(self._nodes)))

    @property
    def positive(self) -> slice:
        """
        :return: Slice selecting the nodes with v > 0
        """
        return slice(self._nv // 2, self._nv)

    @property
    def negative(self) -> slice:
        """
        :return: Slice selecting the nodes with v < 0, ordered as the mirror of ``positive``
        """
        return slice(self._nv // 2 - 1, None, -1)


def build_basis(nv: int) -> GaussHermiteBasis:
    """
    Builds the Gauss-Hermite basis with nv nodes

    :param nv: Number of nodes, even and at least 2
    :return: GaussHermiteBasis
    :raises ValueError: When nv is odd or smaller than 2
    """
    if nv < 2 or nv % 2:
        raise ValueError(f"nv must be an even integer >= 2, got {nv}")

    nodes, weights = _gauss_hermite_rule(nv)

    table = orthonormal_hermite(nodes, nv - 1)
    scale = jnp.sqrt(2.0 * jnp.arange(1, nv, dtype=jnp.float64))
    # c_j(v_i) = sum_k sqrt(2k) H̃_k(v_j) H̃_{k-1}(v_i) w_j
    deriv_coeffs = (table[:-1].T * scale) @ table[1:] * weights[None, :]

    return GaussHermiteBasis(nodes, weights, deriv_coeffs)


def density(basis: GaussHermiteBasis, phi: jax.Array) -> jax.Array:
    """
    Number density ρ = Σ_j w_j φ_j

    :param basis: Velocity basis
    :param phi: Nodal values, velocity on the last axis
    :return: Density with the velocity axis contracted
    """
    check_last_axis(phi, basis.nv, "phi")
    return jnp.asarray(phi) @ basis.weights


def velocity_derivative(basis: GaussHermiteBasis, g: jax.Array) -> jax.Array:
    """
    Spectral velocity derivative of nodal values

    :param basis: Velocity basis
    :param g: Nodal values, velocity on the last axis
    :return: Σ_j g_j c_j(v_i) at every node i
    """
    check_last_axis(g, basis.nv, "g")
    return jnp.asarray(g) @ basis.deriv_coeffs.T
