"""
JaxKin: asymptotic-preserving IMEX Runge-Kutta solvers for the 1D semiconductor
Boltzmann equation in the diffusive scaling.

The submodules of this package are:

    * velocity: Gauss-Hermite velocity discretization
    * collision: scattering kernels, collision and penalization operators
    * spatial: grids, WENO transport fluxes and finite-difference stencils
    * imex: double Butcher tableaux and the parity-system IMEX integrator
    * field: prescribed potentials and the Poisson solve
    * boundary: maxwellian injection and ghost-cell filling
    * refsolver: drift-diffusion and explicit kinetic reference solvers
    * scenarios: canned configurations and initial data
    * cli: command line entry point and verification harness
"""
import jax

jax.config.update("jax_enable_x64", True)

__all__ = [
    "velocity",
    "collision",
    "spatial",
    "imex",
    "field",
    "boundary",
    "refsolver",
    "scenarios",
    "cli",
]
