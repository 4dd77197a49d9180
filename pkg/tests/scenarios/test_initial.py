import jax.numpy as jnp
import pytest

from jaxkin.field import FieldSpec
from jaxkin.imex import implicit_psi_rhs
from jaxkin.scenarios import (
    ScenarioConfig,
    build_problem,
    initial_phi,
    initialize,
    scenario,
    well_prepared_psi,
    with_overrides,
)

TOL = 1e-12


@pytest.mark.parametrize("name, value", [("test1_kinetic", 1.0), ("test2_fluid", 0.0)])
def test_constant_initial_data(name, value):
    problem = build_problem(scenario(name))
    state = initialize(problem.config, problem.basis, problem.grid, problem.context)

    assert state.shape == (problem.grid.nx, 16)
    assert state.time == 0.0
    assert jnp.allclose(state.phi, value, atol=TOL)
    assert jnp.allclose(state.psi, 0.0, atol=TOL)
    assert jnp.allclose(state.rho, value, atol=TOL)


def test_sine_profile():
    config = ScenarioConfig("sine", t_final=0.1, nx=8, initial="sine", initial_amplitude=0.25)
    problem = build_problem(config)
    phi = initial_phi(config, problem.grid, 4)

    assert phi.shape == (8, 4)
    assert jnp.allclose(phi[:, 0], phi[:, -1])
    assert jnp.isclose(jnp.mean(phi), 1.0, atol=TOL)
    assert jnp.max(phi) <= 1.25


def test_well_prepared_uniform_state_has_no_current():
    config = ScenarioConfig("uniform", t_final=0.1, nx=16, nv=8, well_prepared=True)
    problem = build_problem(config)
    state = initialize(config, problem.basis, problem.grid)

    assert jnp.allclose(state.psi, 0.0, atol=TOL)


def test_well_prepared_odd_parity():
    config = scenario("smooth_periodic")
    problem = build_problem(config)
    phi = initial_phi(config, problem.grid, problem.basis.nv)
    psi = well_prepared_psi(problem.context, phi)
    pos, neg = problem.basis.positive, problem.basis.negative

    assert jnp.allclose(psi[:, pos], -psi[:, neg], atol=1e-10)
    assert float(jnp.max(jnp.abs(psi))) > 0.0


def test_well_prepared_field_balance():
    # ψ = -(v φ_x - E(φ_v - 2vφ))/λ: for uniform φ = 1 under a constant field E, ψ = -2 E v /λ
    config = ScenarioConfig("slope", t_final=0.1, nx=16, nv=8, field=FieldSpec(mode="constant", strength=0.5))
    problem = build_problem(config)
    psi = well_prepared_psi(problem.context, jnp.ones((16, 8)))

    assert jnp.allclose(psi, -2.0 * 0.5 * problem.basis.nodes[None, :], atol=1e-12)


@pytest.mark.parametrize("epsilon", [1.0, 1e-6])
def test_well_prepared_data_is_a_discrete_equilibrium(epsilon):
    config = with_overrides(scenario("smooth_periodic"), nx=16, nv=8, epsilon=epsilon)
    problem = build_problem(config)
    ctx = problem.context
    state = initialize(config, problem.basis, problem.grid, ctx)
    field = ctx.field.evaluate(state.rho)
    rhs = implicit_psi_rhs(ctx, ctx.ghosts.fill(state.phi, state.psi, field), state.phi, state.psi, field)

    assert float(jnp.max(jnp.abs(rhs))) * epsilon**2 < 1e-10
