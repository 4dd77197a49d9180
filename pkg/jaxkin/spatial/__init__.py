"""
Spatial discretization of the JaxKin package.

The submodules of this module are:

    * grid: cell-centred grid with ghost layers
    * weno: third and fifth order WENO reconstruction
    * fluxes: viscosity pair and the conservative transport divergence
    * stencils: central second derivatives, Laplacian matrices and wall formulas
    * prototype: scalar relaxation system used to study flux stability
"""
from .fluxes import ViscosityPair, transport_divergence, viscosity_pair
from .grid import SpatialGrid, build_grid, trim
from .prototype import PrototypeHistory, ViscosityPreset, prototype_run, prototype_viscosities
from .stencils import (
    CLOSURES,
    laplacian_matrix,
    laplacian_wall_term,
    one_sided_gradient,
    second_derivative,
    wall_extrapolation,
    wall_weights,
)
from .weno import WENO_EPS, stencil_radius, weno_interface_values

__all__ = [
    "ViscosityPair",
    "transport_divergence",
    "viscosity_pair",
    "SpatialGrid",
    "build_grid",
    "trim",
    "PrototypeHistory",
    "ViscosityPreset",
    "prototype_run",
    "prototype_viscosities",
    "CLOSURES",
    "laplacian_matrix",
    "laplacian_wall_term",
    "one_sided_gradient",
    "second_derivative",
    "wall_extrapolation",
    "wall_weights",
    "WENO_EPS",
    "stencil_radius",
    "weno_interface_values",
]
