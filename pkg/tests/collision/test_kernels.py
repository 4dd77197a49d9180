import jax.numpy as jnp
import pytest

from jaxkin.collision import (
    EPI_CONSTANT,
    KernelKind,
    KernelSpec,
    apply_L,
    apply_Q,
    build_kernel,
    penalization,
    penalized_residue,
)
from jaxkin.velocity import build_basis, density

TOL = 1e-12
NV = 16


@pytest.fixture
def basis():
    return build_basis(NV)


@pytest.fixture
def phi(basis):
    x = jnp.linspace(0.0, 1.0, 6)[:, None]
    return 1.0 + x * jnp.sin(basis.nodes)[None, :] + 0.3 * basis.nodes**2


class TestRTA:
    def test_coefficients(self, basis):
        kernel = build_kernel("rta", basis)

        assert kernel.kind is KernelKind.RTA
        assert jnp.allclose(kernel.collision_frequency, 1.0, atol=TOL)
        assert jnp.isclose(kernel.diffusion, 0.5, atol=TOL)
        assert jnp.isclose(kernel.mobility, 1.0, atol=TOL)

    def test_relaxation_to_density(self, basis, phi):
        kernel = build_kernel(KernelKind.RTA, basis)

        assert jnp.allclose(apply_Q(kernel, basis, phi), apply_L(phi, density(basis, phi), 1.0), atol=TOL)

    def test_residue_vanishes(self, basis, phi):
        kernel = build_kernel(KernelKind.RTA, basis, penalty_beta=1.0)

        assert jnp.array_equal(penalized_residue(kernel, basis, phi), jnp.zeros_like(phi))


@pytest.mark.parametrize("kind", ["rta", "epi"])
class TestCollisionInvariants:
    def test_constants_are_equilibria(self, basis, kind):
        kernel = build_kernel(kind, basis)
        phi = jnp.full((4, NV), 2.5)

        assert jnp.array_equal(apply_Q(kernel, basis, phi), jnp.zeros_like(phi))
        assert jnp.array_equal(penalized_residue(kernel, basis, phi), jnp.zeros_like(phi))

    def test_mass_conservation(self, basis, phi, kind):
        kernel = build_kernel(kind, basis)

        assert jnp.allclose(apply_Q(kernel, basis, phi) @ basis.weights, 0.0, atol=TOL)
        assert jnp.allclose(penalization(basis, phi, 2.0) @ basis.weights, 0.0, atol=TOL)

    def test_penalization_matches_definition(self, basis, phi, kind):
        beta = 1.7
        expected = apply_L(phi, density(basis, phi), beta)

        assert jnp.allclose(penalization(basis, phi, beta), expected, atol=TOL)

    def test_residue_is_q_minus_l(self, basis, phi, kind):
        kernel = build_kernel(kind, basis, penalty_beta=1.3)
        expected = apply_Q(kernel, basis, phi) - penalization(basis, phi, 1.3)

        assert jnp.allclose(penalized_residue(kernel, basis, phi), expected, atol=1e-11)


class TestEPI:
    def test_cross_section(self, basis):
        kernel = build_kernel("epi", basis)

        assert kernel.epi_constant == EPI_CONSTANT
        assert jnp.array_equal(kernel.sigma_matrix, kernel.sigma_matrix.T)
        assert jnp.all(kernel.sigma_matrix > 0)
        assert jnp.all(kernel.collision_frequency > 0)
        assert kernel.diffusion > 0

    def test_rows_follow_energy_exchange(self, basis):
        kernel = build_kernel("epi", basis)
        v = basis.nodes
        i = NV // 2
        expected = jnp.exp(-EPI_CONSTANT * (v[i] ** 2 - v**2 + 1.0) ** 2) + jnp.exp(
            -EPI_CONSTANT * (v[i] ** 2 - v**2 - 1.0) ** 2
        )

        assert jnp.allclose(kernel.sigma_matrix[i], expected, atol=TOL)


def test_invalid_kernels(basis):
    sigma = jnp.ones((NV, NV))
    with pytest.raises(ValueError):
        KernelSpec("rta", sigma, basis.weights, basis.nodes, penalty_beta=0.0)
    with pytest.raises(ValueError):
        KernelSpec("rta", sigma.at[0, 1].set(2.0), basis.weights, basis.nodes)
    with pytest.raises(ValueError):
        KernelSpec("rta", -sigma, basis.weights, basis.nodes)
    with pytest.raises(ValueError):
        build_kernel("bgk", basis)
