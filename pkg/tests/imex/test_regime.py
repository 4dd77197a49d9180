import pytest

from jaxkin.imex import StepRule, diffusion_switch, time_step, uniform_steps


@pytest.mark.parametrize("epsilon, dx, expected", [(0.01, 0.1, 1.0), (0.1, 0.1, 0.0), (1.0, 0.02, 0.0)])
def test_diffusion_switch(epsilon, dx, expected):
    assert diffusion_switch(epsilon, dx) == expected


def test_hyperbolic_rule():
    step = time_step(1.0, 0.1, 2.0, c_h=0.5)

    assert step.rule is StepRule.HYPERBOLIC
    assert step.dt == pytest.approx(0.025)
    assert step.parabolic_bound == pytest.approx(0.005)


def test_diffusive_rule():
    step = time_step(0.001, 0.05, 4.0, c_m=0.5)

    assert step.rule is StepRule.DIFFUSIVE
    assert step.dt == pytest.approx(0.025)
    assert step.parabolic_ratio == pytest.approx(20.0)


@pytest.mark.parametrize("args", [(0.0, 0.1, 1.0), (1.0, -0.1, 1.0), (1.0, 0.1, 0.0)])
def test_invalid_arguments(args):
    with pytest.raises(ValueError):
        time_step(*args)


@pytest.mark.parametrize(
    "span, dt, expected",
    [(0.1, 0.025, (4, 0.025)), (1.0, 0.3, (4, 0.25)), (0.0, 0.1, (0, 0.0)), (0.05, 1.0, (1, 0.05))],
)
def test_uniform_steps(span, dt, expected):
    n_steps, size = uniform_steps(span, dt)

    assert n_steps == expected[0]
    assert size == pytest.approx(expected[1])
