"""
Collision operators of the JaxKin package.

The submodules of this module are:

    * kernels: RTA and EPI scattering kernels, the collision operator Q and the penalization L
"""
from .kernels import (
    EPI_CONSTANT,
    KernelKind,
    KernelSpec,
    apply_L,
    apply_Q,
    build_kernel,
    penalization,
    penalized_residue,
)

__all__ = [
    "EPI_CONSTANT",
    "KernelKind",
    "KernelSpec",
    "apply_L",
    "apply_Q",
    "build_kernel",
    "penalization",
    "penalized_residue",
]
