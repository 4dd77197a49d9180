"""
Electric field of the JaxKin package.

The submodules of this module are:

    * poisson: doping profile and the Dirichlet Poisson solve
    * prescribed: field specifications, analytic potentials and the field provider
"""
from .poisson import DopingProfile, FieldState, doping_density, field_from_potential, poisson_residual, solve_poisson
from .prescribed import WELL_CONSTANT, ElectricField, FieldMode, FieldSpec, PotentialProfile, prescribed_field

__all__ = [
    "DopingProfile",
    "FieldState",
    "doping_density",
    "field_from_potential",
    "poisson_residual",
    "solve_poisson",
    "WELL_CONSTANT",
    "ElectricField",
    "FieldMode",
    "FieldSpec",
    "PotentialProfile",
    "prescribed_field",
]
