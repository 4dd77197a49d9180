"""Ghost-cell management for the parity unknowns"""
import logging
from typing import NamedTuple, Optional

import jax

from ..collision import KernelSpec
from ..field import FieldState
from ..spatial import SpatialGrid
from ..velocity import GaussHermiteBasis
from .injection import (
    BoundaryKind,
    BoundarySpec,
    WallCoupling,
    WallValues,
    apply_diffusive_bc,
    apply_flux_neumann_psi,
    apply_kinetic_bc,
    diffusive_wall_coupling,
    fill_periodic,
    fill_reflected,
    maxwellian_injection,
)

logger = logging.getLogger(__name__)


class PaddedState(NamedTuple):
    """φ and ψ with ghost layers, plus the wall values used to build them"""

    phi: jax.Array
    psi: jax.Array
    walls: Optional[WallValues]


class GhostFiller:
    """
    Fills the ghost layers of φ and ψ according to a BoundarySpec

    Injection walls use the kinetic closure when ``diffusive`` is False and the
    Robin closure otherwise, the same switch that turns on μ.
    """

    def __init__(
        self,
        spec: BoundarySpec,
        grid: SpatialGrid,
        basis: GaussHermiteBasis,
        kernel: KernelSpec,
        epsilon: float,
        diffusive: bool,
        order: int = 2,
    ):
        if grid.nx < grid.ghost:
            raise ValueError(f"Grid of {grid.nx} cells cannot fill {grid.ghost} ghost layers")
        self._spec = spec
        self._grid = grid
        self._basis = basis
        self._kernel = kernel
        self._epsilon = epsilon
        self._diffusive = diffusive
        self._order = order
        self._injection = maxwellian_injection(basis, spec.inflow_left, spec.inflow_right)
        logger.debug("ghost filler kind=%s diffusive=%s order=%d", spec.kind.value, diffusive, order)

    @property
    def periodic(self) -> bool:
        """
        :return: True for wrapped ghosts
        """
        return self._spec.kind is BoundaryKind.PERIODIC

    @property
    def phi_closure(self) -> str:
        """
        :return: Laplacian closure matching the φ ghosts
        """
        return "periodic" if self.periodic else "dirichlet"

    @property
    def psi_closure(self) -> str:
        """
        :return: Laplacian closure matching the ψ ghosts
        """
        if self.periodic:
            return "periodic"
        return "neumann" if self._spec.psi_neumann else "dirichlet"

    def wall_values(self, phi: jax.Array, psi: jax.Array, field: FieldState) -> Optional[WallValues]:
        """
        :return: Wall values at both ends, None for periodic grids
        """
        if self.periodic:
            return None
        if self._diffusive:
            return apply_diffusive_bc(
                phi, self._injection, self._epsilon, self._kernel, self._basis, field, self._grid, self._order
            )
        return apply_kinetic_bc(phi, psi, self._injection, self._basis, self._epsilon, self._order)

    def phi_wall_coupling(self, e_left: float = 0.0, e_right: float = 0.0) -> Optional[WallCoupling]:
        """
        Affine dependence of the φ wall values on the interior, for implicit solves

        :param e_left: Electric field at x_lo
        :param e_right: Electric field at x_hi
        :return: WallCoupling of the Robin closure, None on periodic grids and for kinetic walls
        """
        if self.periodic or not self._diffusive:
            return None
        return diffusive_wall_coupling(
            self._injection, self._epsilon, self._kernel, self._basis, self._grid, e_left, e_right, self._order
        )

    def fill(self, phi: jax.Array, psi: jax.Array, field: FieldState) -> PaddedState:
        """
        :param phi: Interior φ, shape (nx, nv)
        :param psi: Interior ψ, shape (nx, nv)
        :param field: Current electric field
        :return: PaddedState
        """
        grid = self._grid
        if self.periodic:
            return PaddedState(fill_periodic(grid, phi), fill_periodic(grid, psi), None)

        walls = self.wall_values(phi, psi, field)
        phi_pad = fill_reflected(grid, phi, walls.phi_left, walls.phi_right)
        if self._spec.psi_neumann:
            psi_pad = apply_flux_neumann_psi(grid, psi)
        else:
            psi_pad = fill_reflected(grid, psi, walls.psi_left, walls.psi_right)
        return PaddedState(phi_pad, psi_pad, walls)
