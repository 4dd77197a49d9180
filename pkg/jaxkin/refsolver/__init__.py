"""
Reference solvers of the JaxKin package.

The submodules of this module are:

    * drift_diffusion: explicit conservative drift-diffusion oracle
    * kinetic_explicit: RK4 integration of the unpenalized parity system
"""
from .drift_diffusion import (
    DDBoundary,
    DriftDiffusionState,
    ReferenceResult,
    dd_run,
    dd_step,
    march,
    parabolic_bound,
)
from .kinetic_explicit import kinetic_context, kinetic_reference_run, kinetic_rhs, reference_time_step, rk4_step

__all__ = [
    "DDBoundary",
    "DriftDiffusionState",
    "ReferenceResult",
    "dd_run",
    "dd_step",
    "march",
    "parabolic_bound",
    "kinetic_context",
    "kinetic_reference_run",
    "kinetic_rhs",
    "reference_time_step",
    "rk4_step",
]
