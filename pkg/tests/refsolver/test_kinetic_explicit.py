import jax.numpy as jnp
import pytest

from jaxkin.cli import run_scenario
from jaxkin.errors import NumericalFailure
from jaxkin.imex import make_state
from jaxkin.refsolver import (
    kinetic_context,
    kinetic_explicit,
    kinetic_reference_run,
    kinetic_rhs,
    reference_time_step,
    rk4_step,
)
from jaxkin.scenarios import ScenarioConfig, scenario, with_overrides

TOL = 1e-12


@pytest.fixture
def config():
    return with_overrides(scenario("smooth_periodic"), nx=16, nv=8, t_final=0.05)


@pytest.mark.parametrize("epsilon", [1.0, 0.5])
def test_context(epsilon):
    context = kinetic_context(ScenarioConfig("ctx", t_final=0.1, nx=16, nv=8, epsilon=epsilon))

    assert context.mu == 0.0
    assert context.viscosities.alpha_u == pytest.approx(epsilon)
    assert context.viscosities.alpha_v == pytest.approx(1.0 / epsilon)


def test_equilibrium_is_stationary():
    context = kinetic_context(ScenarioConfig("eq", t_final=0.1, nx=16, nv=8))
    shape = (16, 8)
    state = make_state(context.basis, jnp.ones(shape), jnp.zeros(shape))

    dphi, dpsi = kinetic_rhs(context, state.phi, state.psi, context.field.evaluate(state.rho))
    new = rk4_step(state, 0.01, context)

    assert jnp.allclose(dphi, 0.0, atol=TOL) and jnp.allclose(dpsi, 0.0, atol=TOL)
    assert jnp.allclose(new.phi, 1.0, atol=TOL)
    assert new.time == pytest.approx(0.01)


def test_reference_conserves_mass(config):
    result = kinetic_reference_run(config)

    assert result.times == (0.05,)
    assert float(jnp.mean(result.final)) == pytest.approx(1.0, abs=1e-10)


def test_agrees_with_the_imex_run_in_the_kinetic_regime(config):
    reference = kinetic_reference_run(config)
    imex = run_scenario(config).report.density

    assert float(jnp.max(jnp.abs(imex - reference.final))) < 1e-2


class TestTimeStep:
    def test_hyperbolic_bound_in_the_kinetic_regime(self):
        dt = reference_time_step(1.0, 0.02, 4.0, 1.0, 0.5)

        assert dt == pytest.approx(0.5 * 0.02 / 4.0)

    def test_relaxation_bound_when_epsilon_is_small(self):
        eps, dx, vmax = 1e-3, 0.05, 4.0
        dt = reference_time_step(eps, dx, vmax, 1.0, 0.5)

        assert dt < 0.5 * eps * dx / vmax
        assert dt * (1.0 / eps**2 + 2.0 * vmax / (eps * dx)) == pytest.approx(2.5)


def test_stiff_reference_stays_finite():
    config = with_overrides(scenario("test2_fluid"), t_final=1e-3)
    result = kinetic_reference_run(config)

    assert jnp.all(jnp.isfinite(result.final))
    assert float(jnp.max(result.final)) <= 1.01e-3


def test_non_finite_reference_is_reported(config, monkeypatch):
    def diverging(state, dt, context):
        return make_state(context.basis, state.phi * jnp.nan, state.psi, state.time + dt)

    monkeypatch.setattr(kinetic_explicit, "rk4_step", diverging)

    with pytest.raises(NumericalFailure):
        kinetic_reference_run(config)
