import jax.numpy as jnp
import numpy as np
import pytest

from jaxkin.field import DopingProfile, doping_density, field_from_potential, poisson_residual, solve_poisson
from jaxkin.spatial import SpatialGrid

TOL = 1e-10
GAMMA = 0.002
VOLTAGE = 5.0


@pytest.fixture
def grid():
    return SpatialGrid(50, ghost=1)


def test_doping_profile_levels():
    profile = DopingProfile()
    rho_d = doping_density(profile, jnp.array([0.0, 0.5, 1.0]))

    assert jnp.isclose(rho_d[0], 1.0, atol=1e-6)
    assert jnp.isclose(rho_d[1], profile.m, atol=1e-6)
    assert jnp.isclose(rho_d[2], 1.0, atol=1e-6)


@pytest.mark.parametrize("kwargs", [{"m": 0.0}, {"m": 1.5}, {"x1": 0.8}, {"s": -0.1}])
def test_invalid_doping(kwargs):
    with pytest.raises(ValueError):
        DopingProfile(**kwargs)


class TestSolvePoisson:
    def test_neutral_density_gives_a_linear_potential(self, grid):
        profile = DopingProfile()
        state = solve_poisson(doping_density(profile, grid.centers), GAMMA, VOLTAGE, profile, grid)

        assert jnp.allclose(state.potential, VOLTAGE * grid.centers, atol=TOL)
        assert jnp.allclose(state.efield, -VOLTAGE, atol=1e-8)
        assert jnp.isclose(state.e_left, -VOLTAGE, atol=1e-8)
        assert jnp.isclose(state.e_right, -VOLTAGE, atol=1e-8)

    def test_discrete_residual(self, grid):
        profile = DopingProfile()
        rho = 1.0 + 0.3 * jnp.sin(3.0 * grid.centers)
        state = solve_poisson(rho, GAMMA, VOLTAGE, profile, grid)

        assert poisson_residual(state, rho, GAMMA, VOLTAGE, profile, grid) < 1e-8

    @pytest.mark.parametrize("to_array", [jnp.asarray, np.asarray])
    def test_density_is_left_untouched(self, grid, to_array):
        profile = DopingProfile()
        rho = to_array(1.0 + 0.3 * np.sin(3.0 * np.asarray(grid.centers)))
        before = np.array(rho)
        state = solve_poisson(rho, GAMMA, VOLTAGE, profile, grid)

        assert np.array_equal(np.asarray(rho), before)
        assert poisson_residual(state, jnp.asarray(before), GAMMA, VOLTAGE, profile, grid) < 1e-8

    def test_invalid_arguments(self, grid):
        profile = DopingProfile()
        with pytest.raises(ValueError):
            solve_poisson(jnp.ones(grid.nx), 0.0, VOLTAGE, profile, grid)
        with pytest.raises(ValueError):
            solve_poisson(jnp.ones(grid.nx + 1), GAMMA, VOLTAGE, profile, grid)


def test_field_from_quadratic_potential(grid):
    x = grid.centers
    state = field_from_potential(grid, x**2, 0.0, 1.0)

    assert jnp.allclose(state.efield, -2.0 * x, atol=1e-8)
    assert jnp.isclose(state.e_left, 0.0, atol=1e-8)
    assert jnp.isclose(state.e_right, -2.0, atol=1e-8)
