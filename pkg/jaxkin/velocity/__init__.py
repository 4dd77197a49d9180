"""
Velocity discretization of the JaxKin package.

The submodules of this module are:

    * gauss_hermite: Gauss-Hermite nodes, weights, moments and spectral velocity derivatives
"""
from .gauss_hermite import (
    THETA,
    GaussHermiteBasis,
    build_basis,
    density,
    maxwellian,
    orthonormal_hermite,
    velocity_derivative,
)

__all__ = [
    "THETA",
    "GaussHermiteBasis",
    "build_basis",
    "density",
    "maxwellian",
    "orthonormal_hermite",
    "velocity_derivative",
]
