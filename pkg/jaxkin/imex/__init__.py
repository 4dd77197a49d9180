"""
IMEX time integration of the JaxKin package.

The submodules of this module are:

    * tableaux: double Butcher tableaux and their classification
    * state: the parity state and derived moments
    * regime: diffusion switch and time-step rules
    * linear: banded and circulant per-velocity operators
    * stepper: stage equations, implicit solvers and the IMEX step
"""
from .linear import VelocityOperators, banded_form, bandwidths
from .regime import StepRule, TimeStep, diffusion_switch, time_step, uniform_steps
from .state import ParityState, current_density, make_state
from .stepper import (
    ImexStepper,
    StepContext,
    explicit_rhs,
    field_term,
    implicit_phi_rhs,
    implicit_psi_rhs,
    psi_star,
    step,
    stepper_for,
)
from .tableaux import (
    SCHEME_ORDER,
    TABLEAUX,
    DoubleButcherTableau,
    SchemeClassification,
    SchemeKind,
    classify,
    get_tableau,
    tableau_ars222,
    tableau_bpr353,
    tableau_euler,
)

__all__ = [
    "StepRule",
    "TimeStep",
    "diffusion_switch",
    "time_step",
    "uniform_steps",
    "ParityState",
    "current_density",
    "make_state",
    "ImexStepper",
    "StepContext",
    "explicit_rhs",
    "field_term",
    "implicit_phi_rhs",
    "implicit_psi_rhs",
    "psi_star",
    "step",
    "stepper_for",
    "VelocityOperators",
    "banded_form",
    "bandwidths",
    "SCHEME_ORDER",
    "TABLEAUX",
    "DoubleButcherTableau",
    "SchemeClassification",
    "SchemeKind",
    "classify",
    "get_tableau",
    "tableau_ars222",
    "tableau_bpr353",
    "tableau_euler",
]
