import jax.numpy as jnp
import pytest

from jaxkin.boundary import (
    BoundaryKind,
    BoundarySpec,
    apply_diffusive_bc,
    apply_flux_neumann_psi,
    apply_kinetic_bc,
    diffusive_wall_coupling,
    fill_periodic,
    fill_reflected,
    injected_density,
    maxwellian_injection,
)
from jaxkin.collision import build_kernel
from jaxkin.field import FieldState
from jaxkin.spatial import SpatialGrid, one_sided_gradient
from jaxkin.velocity import build_basis

TOL = 1e-12
NV = 8
EPSILON = 0.1


@pytest.fixture
def basis():
    return build_basis(NV)


@pytest.fixture
def grid():
    return SpatialGrid(10, ghost=4)


def _wall_field(nx, e_wall=0.0):
    return FieldState(jnp.zeros(nx), jnp.zeros(nx), e_wall, e_wall)


def test_injection_data(basis):
    injection = maxwellian_injection(basis, 2.0, 0.5)

    assert injection.left.shape == (NV // 2,)
    assert jnp.allclose(injection.left, 2.0) and jnp.allclose(injection.right, 0.5)
    left, right = injected_density(basis, injection)
    assert left == pytest.approx(2.0, abs=TOL)
    assert right == pytest.approx(0.5, abs=TOL)


def test_boundary_spec():
    spec = BoundarySpec(kind="injection")

    assert spec.kind is BoundaryKind.INJECTION
    with pytest.raises(ValueError):
        BoundarySpec(inflow_left=-1.0)


class TestKineticClosure:
    def test_equilibrium_is_preserved(self, basis):
        phi = jnp.ones((10, NV))
        walls = apply_kinetic_bc(phi, jnp.zeros_like(phi), maxwellian_injection(basis), basis, EPSILON)

        for value in (walls.phi_left, walls.phi_right):
            assert jnp.allclose(value, 1.0, atol=TOL)
        for value in (walls.psi_left, walls.psi_right):
            assert jnp.allclose(value, 0.0, atol=TOL)

    def test_empty_inflow(self, basis):
        phi = jnp.ones((10, NV))
        walls = apply_kinetic_bc(phi, jnp.zeros_like(phi), maxwellian_injection(basis, 0.0, 0.0), basis, EPSILON)
        pos, neg = basis.positive, basis.negative

        assert jnp.allclose(walls.phi_left, 0.5, atol=TOL)
        assert jnp.allclose(walls.psi_left[pos], -0.5 / EPSILON, atol=TOL)
        assert jnp.allclose(walls.psi_left[neg], 0.5 / EPSILON, atol=TOL)
        assert jnp.allclose(walls.psi_right[pos], 0.5 / EPSILON, atol=TOL)

    def test_incoming_distribution_matches_injection(self, basis):
        x = jnp.linspace(0.0, 1.0, 10)[:, None]
        phi = 1.0 + x * basis.nodes**2
        psi = 0.3 * x * basis.nodes
        injection = maxwellian_injection(basis, 1.5, 0.7)
        walls = apply_kinetic_bc(phi, psi, injection, basis, EPSILON)
        pos, neg = basis.positive, basis.negative

        # f(v) = φ(v) + εψ(v) enters at x_lo for v > 0 and at x_hi for v < 0
        assert jnp.allclose(walls.phi_left[pos] + EPSILON * walls.psi_left[pos], 1.5, atol=TOL)
        assert jnp.allclose(walls.phi_right[neg] + EPSILON * walls.psi_right[neg], 0.7, atol=TOL)

    def test_needs_enough_cells(self, basis):
        phi = jnp.ones((2, NV))
        with pytest.raises(ValueError):
            apply_kinetic_bc(phi, phi, maxwellian_injection(basis), basis, EPSILON, order=3)


class TestDiffusiveClosure:
    def test_equilibrium_is_preserved(self, basis, grid):
        kernel = build_kernel("rta", basis)
        phi = jnp.ones((grid.nx, NV))
        walls = apply_diffusive_bc(phi, maxwellian_injection(basis), 1e-3, kernel, basis, _wall_field(grid.nx), grid)

        assert jnp.allclose(walls.phi_left, 1.0, atol=TOL)
        assert jnp.allclose(walls.phi_right, 1.0, atol=TOL)
        assert jnp.allclose(walls.psi_left, 0.0, atol=TOL)
        assert jnp.allclose(walls.psi_right, 0.0, atol=TOL)

    def test_zero_epsilon_is_dirichlet(self, basis, grid):
        kernel = build_kernel("epi", basis)
        phi = jnp.ones((grid.nx, NV)) * jnp.linspace(0.0, 2.0, grid.nx)[:, None]
        injection = maxwellian_injection(basis, 0.3, 0.6)
        walls = apply_diffusive_bc(phi, injection, 0.0, kernel, basis, _wall_field(grid.nx, 2.0), grid)

        assert jnp.allclose(walls.phi_left, 0.3, atol=TOL)
        assert jnp.allclose(walls.phi_right, 0.6, atol=TOL)

    def test_parity_of_wall_values(self, basis, grid):
        kernel = build_kernel("rta", basis)
        phi = jnp.ones((grid.nx, NV)) * jnp.linspace(0.5, 2.0, grid.nx)[:, None]
        field = _wall_field(grid.nx, -1.0)
        walls = apply_diffusive_bc(phi, maxwellian_injection(basis), 0.01, kernel, basis, field, grid)
        pos, neg = basis.positive, basis.negative

        assert jnp.allclose(walls.phi_left[pos], walls.phi_left[neg], atol=TOL)
        assert jnp.allclose(walls.psi_right[pos], -walls.psi_right[neg], atol=TOL)

    def test_robin_relation_at_both_walls(self, basis, grid):
        kernel = build_kernel("rta", basis)
        phi = jnp.ones((grid.nx, NV)) * (1.0 + 0.4 * grid.centers**2)[:, None]
        injection = maxwellian_injection(basis, 1.5, 0.7)
        eps, efield = 0.01, -1.0
        walls = apply_diffusive_bc(phi, injection, eps, kernel, basis, _wall_field(grid.nx, efield), grid)
        pos = basis.positive
        scale = eps * basis.nodes[pos] / kernel.collision_frequency[pos]

        left = walls.phi_left[pos] - scale * (walls.dphi_left[pos] + 2.0 * efield * 1.5)
        right = walls.phi_right[pos] + scale * (walls.dphi_right[pos] + 2.0 * efield * 0.7)
        assert jnp.allclose(left, 1.5, atol=1e-10)
        assert jnp.allclose(right, 0.7, atol=1e-10)
        gradient = one_sided_gradient(grid, phi, "left", 2, wall_value=walls.phi_left)
        assert jnp.allclose(walls.dphi_left, gradient, atol=1e-10)

    def test_wall_coupling_is_affine(self, basis, grid):
        kernel = build_kernel("rta", basis)
        phi = jnp.ones((grid.nx, NV)) * jnp.linspace(0.5, 2.0, grid.nx)[:, None]
        injection = maxwellian_injection(basis, 1.2, 0.4)
        walls = apply_diffusive_bc(phi, injection, 0.02, kernel, basis, _wall_field(grid.nx, 0.5), grid)
        coupling = diffusive_wall_coupling(injection, 0.02, kernel, basis, grid, 0.5, 0.5)
        unfielded = diffusive_wall_coupling(injection, 0.02, kernel, basis, grid)

        assert coupling.gain_left.shape == (2, NV)
        assert jnp.allclose(coupling.gain_left, unfielded.gain_left, atol=TOL)
        left = coupling.offset_left + jnp.sum(coupling.gain_left * phi[:2], axis=0)
        right = coupling.offset_right + jnp.sum(coupling.gain_right * phi[-2:][::-1], axis=0)
        assert jnp.allclose(walls.phi_left, left, atol=TOL)
        assert jnp.allclose(walls.phi_right, right, atol=TOL)

    def test_kinetic_closure_has_no_wall_gradient(self, basis):
        phi = jnp.ones((10, NV))
        walls = apply_kinetic_bc(phi, jnp.zeros_like(phi), maxwellian_injection(basis), basis, EPSILON)

        assert walls.dphi_left is None and walls.dphi_right is None


class TestGhostLayers:
    def test_periodic(self, grid):
        u = jnp.arange(float(grid.nx))
        padded = fill_periodic(grid, u)

        assert padded.shape == (grid.padded_size,)
        assert jnp.array_equal(padded[: grid.ghost], u[-grid.ghost :])
        assert jnp.array_equal(padded[-grid.ghost :], u[: grid.ghost])

    def test_odd_reflection_through_the_wall(self, grid):
        u = 2.0 * grid.centers + 1.0
        padded = fill_reflected(grid, u, 1.0, 3.0)
        x = grid.x_lo + (jnp.arange(grid.padded_size) - grid.ghost + 0.5) * grid.dx

        assert jnp.allclose(padded, 2.0 * x + 1.0, atol=TOL)

    def test_even_reflection(self, grid):
        psi = jnp.arange(float(grid.nx))
        padded = apply_flux_neumann_psi(grid, psi)

        assert padded[grid.ghost - 1] == psi[0]
        assert padded[grid.ghost + grid.nx] == psi[-1]
