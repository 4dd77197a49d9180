import jax.numpy as jnp
import pytest

from jaxkin.boundary import fill_reflected
from jaxkin.spatial import (
    SpatialGrid,
    laplacian_matrix,
    laplacian_wall_term,
    one_sided_gradient,
    second_derivative,
    wall_extrapolation,
    wall_weights,
)

TOL = 1e-9


@pytest.fixture
def grid():
    return SpatialGrid(12, 0.0, 1.0, ghost=4)


def _padded_positions(grid):
    return grid.x_lo + (jnp.arange(grid.padded_size) - grid.ghost + 0.5) * grid.dx


@pytest.mark.parametrize("order", [2, 4])
class TestSecondDerivative:
    def test_exact_on_quadratics(self, grid, order):
        x = _padded_positions(grid)

        assert jnp.allclose(second_derivative(grid, 3.0 * x**2 - x, order), 6.0, atol=1e-8)

    def test_periodic_matrix(self, order):
        nx = 64
        x = (jnp.arange(nx) + 0.5) / nx
        lap = laplacian_matrix(nx, 1.0 / nx, order, "periodic")
        expected = -4.0 * jnp.pi**2 * jnp.sin(2.0 * jnp.pi * x)

        assert jnp.allclose(lap @ jnp.sin(2.0 * jnp.pi * x), expected, atol=0.05 if order == 2 else 1e-3)
        assert jnp.allclose(lap.sum(axis=1), 0.0, atol=TOL)

    def test_neumann_rows_sum_to_zero(self, order):
        lap = laplacian_matrix(10, 0.1, order, "neumann")

        assert jnp.allclose(lap.sum(axis=1), 0.0, atol=TOL)

    def test_dirichlet_matrix_matches_reflected_ghosts(self, grid, order):
        u = jnp.cos(3.0 * grid.centers) + grid.centers
        left, right = 0.4, -1.2
        padded = fill_reflected(grid, u, left, right)

        lap = laplacian_matrix(grid.nx, grid.dx, order, "dirichlet")
        folded = lap @ u + laplacian_wall_term(grid, left, right, order)

        assert jnp.allclose(folded, second_derivative(grid, padded, order), atol=1e-8)


def test_wall_term_is_local(grid):
    term = laplacian_wall_term(grid, 1.0, 2.0, 2)

    assert jnp.allclose(term[1:-1], 0.0, atol=TOL)
    assert jnp.isclose(term[0], 2.0 / grid.dx**2)
    assert jnp.isclose(term[-1], 4.0 / grid.dx**2)


def test_stencil_errors(grid):
    with pytest.raises(ValueError):
        laplacian_matrix(8, 0.1, 6)
    with pytest.raises(ValueError):
        laplacian_matrix(8, 0.1, 2, "robin")
    with pytest.raises(ValueError):
        second_derivative(grid, jnp.zeros(grid.nx), 2)
    with pytest.raises(ValueError):
        wall_extrapolation(jnp.zeros(5), "top")


@pytest.mark.parametrize(
    "order, derivative, with_wall, expected",
    [
        (2, 0, False, (1.5, -0.5)),
        (2, 1, False, (-2.0, 3.0, -1.0)),
        (2, 1, True, (-8.0 / 3.0, 3.0, -1.0 / 3.0)),
    ],
)
def test_wall_weights(order, derivative, with_wall, expected):
    assert jnp.allclose(jnp.array(wall_weights(order, derivative, with_wall)), jnp.array(expected), atol=1e-12)


class TestWallFormulas:
    def test_linear_extrapolation(self, grid):
        f = 2.0 * grid.centers + 1.0

        assert jnp.isclose(wall_extrapolation(f, "left", 2), 1.0, atol=TOL)
        assert jnp.isclose(wall_extrapolation(f, "right", 2), 3.0, atol=TOL)

    def test_quadratic_extrapolation(self, grid):
        f = jnp.stack([grid.centers**2, -grid.centers**2], axis=1)

        assert jnp.allclose(wall_extrapolation(f, "left", 3), jnp.array([0.0, 0.0]), atol=TOL)
        assert jnp.allclose(wall_extrapolation(f, "right", 3), jnp.array([1.0, -1.0]), atol=TOL)

    @pytest.mark.parametrize("order", [2, 3])
    def test_gradient_at_both_walls(self, grid, order):
        f = 2.0 * grid.centers - 0.5

        assert jnp.isclose(one_sided_gradient(grid, f, "left", order), 2.0, atol=TOL)
        assert jnp.isclose(one_sided_gradient(grid, f, "right", order), 2.0, atol=TOL)
        assert jnp.isclose(one_sided_gradient(grid, f, "left", order, wall_value=-0.5), 2.0, atol=TOL)
        assert jnp.isclose(one_sided_gradient(grid, f, "right", order, wall_value=1.5), 2.0, atol=TOL)

    @pytest.mark.parametrize("side", ["top", "", "LEFT"])
    def test_gradient_rejects_unknown_side(self, grid, side):
        with pytest.raises(ValueError):
            one_sided_gradient(grid, grid.centers, side)
        with pytest.raises(ValueError):
            one_sided_gradient(grid, grid.centers, side, wall_value=0.0)

    @pytest.mark.parametrize("order", [2, 3])
    def test_gradient_needs_enough_cells(self, grid, order):
        short = grid.centers[:order]

        with pytest.raises(ValueError):
            one_sided_gradient(grid, short, "left", order)
        with pytest.raises(ValueError):
            one_sided_gradient(grid, short[:-1], "right", order, wall_value=0.0)
        assert jnp.isfinite(one_sided_gradient(grid, short, "right", order, wall_value=1.0))
