"""
Boundary conditions of the JaxKin package.

The submodules of this module are:

    * injection: maxwellian injection, kinetic and diffusive wall closures, reflections
    * ghosts: ghost-layer filling of the parity unknowns
"""
from .ghosts import GhostFiller, PaddedState
from .injection import (
    BoundaryKind,
    BoundarySpec,
    InjectionData,
    WallCoupling,
    WallValues,
    apply_diffusive_bc,
    apply_flux_neumann_psi,
    apply_kinetic_bc,
    diffusive_wall_coupling,
    fill_periodic,
    fill_reflected,
    injected_density,
    maxwellian_injection,
)

__all__ = [
    "GhostFiller",
    "PaddedState",
    "BoundaryKind",
    "BoundarySpec",
    "InjectionData",
    "WallCoupling",
    "WallValues",
    "apply_diffusive_bc",
    "apply_flux_neumann_psi",
    "apply_kinetic_bc",
    "diffusive_wall_coupling",
    "fill_periodic",
    "fill_reflected",
    "injected_density",
    "maxwellian_injection",
]
