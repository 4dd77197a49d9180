"""Regime switch and time-step rules"""
import math
from enum import Enum
from typing import NamedTuple


class StepRule(str, Enum):
    """Which stability condition sets the time step"""

    HYPERBOLIC = "hyperbolic"
    DIFFUSIVE = "diffusive"


class TimeStep(NamedTuple):
    """Time step chosen for a run"""

    dt: float
    rule: StepRule
    parabolic_bound: float

    @property
    def parabolic_ratio(self) -> float:
        """
        :return: dt / (dx²/2)
        """
        return self.dt / self.parabolic_bound


def diffusion_switch(epsilon: float, dx: float) -> float:
    """
    μ = 1 in the diffusive regime (ε < Δx), 0 otherwise

    :param epsilon: Knudsen number
    :param dx: Cell width
    :return: μ
    """
    return 1.0 if epsilon < dx else 0.0


def time_step(epsilon: float, dx: float, vmax: float, c_h: float = 0.5, c_m: float = 0.5) -> TimeStep:
    """
    Δt = c_H ε Δx / vmax when ε ≥ Δx, Δt = c_M Δx otherwise

    :param epsilon: Knudsen number
    :param dx: Cell width
    :param vmax: Largest velocity node
    :param c_h: Hyperbolic CFL constant
    :param c_m: Diffusive-regime CFL constant
    :return: TimeStep
    """
    if epsilon <= 0 or dx <= 0 or vmax <= 0 or c_h <= 0 or c_m <= 0:
        raise ValueError("epsilon, dx, vmax and the CFL constants must be positive")
    if epsilon >= dx:
        return TimeStep(c_h * epsilon * dx / vmax, StepRule.HYPERBOLIC, 0.5 * dx**2)
    return TimeStep(c_m * dx, StepRule.DIFFUSIVE, 0.5 * dx**2)


def uniform_steps(span: float, dt: float):
    """
    Splits a time interval into equal steps no longer than dt

    :param span: Interval length
    :param dt: Largest admissible step
    :return: (number of steps, step size)
    """
    if span <= 0:
        return 0, 0.0
    n_steps = max(1, math.ceil(span / dt - 1e-9))
    return n_steps, span / n_steps
