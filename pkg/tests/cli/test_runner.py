import math

import jax.numpy as jnp
import pytest

from jaxkin.cli import RunReport, Snapshot, run_scenario
from jaxkin.refsolver import dd_run
from jaxkin.scenarios import scenario, with_overrides


@pytest.fixture(scope="module")
def fluid_run():
    return run_scenario(with_overrides(scenario("test2_fluid"), scheme="euler", output_times=(0.05,)))


def test_step_plan(fluid_run):
    report = fluid_run.report

    assert isinstance(report, RunReport)
    assert report.steps == 4
    assert report.dt == pytest.approx(0.025)
    assert report.mass_drift is None
    assert report.residuals == ()


def test_snapshots(fluid_run):
    first, last = fluid_run.snapshots

    assert isinstance(first, Snapshot)
    assert (first.time, last.time) == (0.05, 0.1)
    assert last.state.time == pytest.approx(0.1)
    assert jnp.array_equal(last.state.rho, fluid_run.report.density)
    assert last.current.shape == last.field.potential.shape == (20,)


def test_source_builds_up_density(fluid_run):
    first, last = fluid_run.snapshots

    assert jnp.all(jnp.isfinite(last.state.rho))
    assert float(jnp.sum(last.state.rho)) > float(jnp.sum(first.state.rho)) > 0.0


def test_report_lines(fluid_run):
    lines = fluid_run.report.lines()

    assert "scenario=test2_fluid" in lines
    assert "steps=4" in lines
    assert not any(line.startswith("mass_drift") for line in lines)


def test_periodic_mass_drift():
    config = with_overrides(scenario("smooth_periodic"), nx=16, nv=8, t_final=0.03)
    report = run_scenario(config, track_residual=True).report

    assert report.mass_drift is not None and report.mass_drift < 1e-10
    assert len(report.residuals) == report.steps
    assert any(line.startswith("mass_drift=") for line in report.lines())


@pytest.mark.parametrize("scheme", ["euler", "ars222", "bpr353"])
class TestLargeTimeSteps:
    def test_potential_well(self, scheme):
        config = with_overrides(scenario("test1_fluid"), scheme=scheme)
        report = run_scenario(config).report
        # drift piles density into the well: the bound follows the limit solution, not ρ0
        ceiling = 2.0 * float(jnp.max(dd_run(config).final))

        assert report.dt == pytest.approx(0.5 * config.dx)
        assert report.dt > 20.0 * 0.5 * config.dx**2
        assert jnp.all(jnp.isfinite(report.density))
        assert float(jnp.max(report.density)) <= ceiling

    def test_source_in_an_empty_slab(self, scheme):
        config = with_overrides(scenario("test2_fluid"), scheme=scheme, nx=50)
        report = run_scenario(config).report
        ceiling = 2.0 * config.source * config.t_final

        assert report.dt == pytest.approx(0.5 * config.dx)
        assert jnp.all(jnp.isfinite(report.density))
        assert float(jnp.max(report.density)) <= ceiling


@pytest.mark.parametrize("scheme", ["euler", "ars222", "bpr353"])
def test_diode_reaches_a_steady_state(scheme):
    report = run_scenario(with_overrides(scenario("test3"), scheme=scheme), track_residual=True).report
    residuals = report.residuals

    assert all(math.isfinite(r) for r in residuals)
    assert residuals[-1] <= 0.1 * max(residuals)
    assert float(report.density[0]) == pytest.approx(1.0, rel=0.05)
    assert float(report.density[-1]) == pytest.approx(1.0, rel=0.05)


@pytest.mark.parametrize("name", ["test1_kinetic", "test2_kinetic"])
def test_kinetic_scenarios_complete(name):
    report = run_scenario(with_overrides(scenario(name), nv=8)).report

    assert jnp.all(jnp.isfinite(report.density))
    assert report.steps > 0
