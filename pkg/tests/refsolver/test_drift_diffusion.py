import logging

import jax.numpy as jnp
import pytest

from jaxkin.field import FieldState
from jaxkin.refsolver import DDBoundary, DriftDiffusionState, dd_run, dd_step, march, parabolic_bound
from jaxkin.scenarios import scenario, with_overrides
from jaxkin.spatial import SpatialGrid

TOL = 1e-12
NX = 20


@pytest.fixture
def grid():
    return SpatialGrid(NX, ghost=1)


def _field(efield, e_left=0.0, e_right=0.0):
    return FieldState(jnp.zeros_like(efield), efield, e_left, e_right)


def test_parabolic_bound():
    assert parabolic_bound(0.1, 0.5) == pytest.approx(0.01)


class TestStep:
    def test_uniform_density_is_stationary(self, grid):
        state = DriftDiffusionState(jnp.full(NX, 2.0), 0.0)
        new = dd_step(state, 1e-3, 0.5, 1.0, _field(jnp.full(NX, 0.7)), jnp.zeros(NX), grid)

        assert jnp.allclose(new.rho, 2.0, atol=TOL)
        assert new.time == pytest.approx(1e-3)

    def test_source(self, grid):
        state = DriftDiffusionState(jnp.zeros(NX), 0.0)
        new = dd_step(state, 1e-3, 0.5, 1.0, _field(jnp.zeros(NX)), jnp.ones(NX), grid)

        assert jnp.allclose(new.rho, 1e-3, atol=TOL)

    def test_periodic_mass(self, grid):
        rho = 1.0 + 0.5 * jnp.sin(2.0 * jnp.pi * grid.centers)
        efield = jnp.cos(2.0 * jnp.pi * grid.centers)
        state = DriftDiffusionState(rho, 0.0)
        for _ in range(10):
            state = dd_step(state, 5e-4, 0.5, 1.0, _field(efield), jnp.zeros(NX), grid)

        assert float(jnp.sum(state.rho)) == pytest.approx(float(jnp.sum(rho)), abs=1e-10)

    def test_dirichlet_walls(self, grid):
        state = DriftDiffusionState(jnp.ones(NX), 0.0)
        new = dd_step(state, 5e-4, 0.5, 1.0, _field(jnp.zeros(NX)), jnp.zeros(NX), grid, DDBoundary(False, 1.0, 1.0))
        drained = dd_step(state, 5e-4, 0.5, 1.0, _field(jnp.zeros(NX)), jnp.zeros(NX), grid, DDBoundary(False))

        assert jnp.allclose(new.rho, 1.0, atol=TOL)
        assert drained.rho[0] < 1.0 and drained.rho[-1] < 1.0
        assert jnp.allclose(drained.rho[1:-1], 1.0, atol=TOL)

    def test_warns_above_the_parabolic_bound(self, grid, caplog):
        state = DriftDiffusionState(jnp.ones(NX), 0.0)
        with caplog.at_level(logging.WARNING):
            dd_step(state, 1.0, 0.5, 1.0, _field(jnp.zeros(NX)), jnp.zeros(NX), grid)

        assert "parabolic bound" in caplog.text


def test_march_hits_every_output_time():
    calls = []

    def advance(state, dt):
        calls.append(dt)
        return DriftDiffusionState(state.rho, state.time + dt)

    times, states = march(DriftDiffusionState(jnp.zeros(1), 0.0), 1.0, [0.5, 0.25], 0.1, advance)

    assert times == (0.25, 0.5, 1.0)
    assert [s.time for s in states] == pytest.approx([0.25, 0.5, 1.0])
    assert len(calls) == 3 + 3 + 5


class TestRun:
    def test_periodic_mass(self):
        config = with_overrides(scenario("smooth_periodic"), nx=NX, t_final=0.02)
        result = dd_run(config)

        assert result.times == (0.02,)
        assert float(jnp.sum(result.final)) / NX == pytest.approx(1.0, abs=1e-10)

    def test_empty_slab_stays_empty(self):
        config = with_overrides(scenario("test2_fluid"), source=0.0, t_final=0.01)
        result = dd_run(config)

        assert jnp.allclose(result.final, 0.0, atol=TOL)

    def test_source_fills_the_slab(self):
        config = with_overrides(scenario("test2_fluid"), t_final=0.01, output_times=(0.005,))
        result = dd_run(config)

        assert len(result.densities) == 2
        assert jnp.all(result.final >= 0.0)
        assert float(jnp.sum(result.final)) > float(jnp.sum(result.densities[0]))

    def test_grid_override(self):
        result = dd_run(with_overrides(scenario("test2_fluid"), t_final=0.005), nx=10)

        assert result.x.shape == (10,)
