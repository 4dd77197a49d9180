"""
Scenarios of the JaxKin package.

The submodules of this module are:

    * configs: ScenarioConfig and the registry of named problems
    * assembly: basis, kernel, grid, step context and time step of a configuration
    * initial: initial parity states, including well-prepared data
"""
from .assembly import Problem, build_problem, stencil_orders, with_overrides
from .configs import SCENARIOS, InitialKind, ScenarioConfig, scenario
from .initial import initial_phi, initialize, well_prepared_psi

__all__ = [
    "Problem",
    "build_problem",
    "stencil_orders",
    "with_overrides",
    "SCENARIOS",
    "InitialKind",
    "ScenarioConfig",
    "scenario",
    "initial_phi",
    "initialize",
    "well_prepared_psi",
]
