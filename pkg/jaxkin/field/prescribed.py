"""Field specifications and the electric field seen by the kinetic solver"""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import jax
import jax.numpy as jnp

from ..errors import NumericalFailure
from ..spatial import SpatialGrid
from ..utils import check_finite
from .poisson import DopingProfile, FieldState, solve_poisson

WELL_CONSTANT = 50.0 * math.e


class FieldMode(str, Enum):
    """How the electric field is obtained"""

    PRESCRIBED = "prescribed"
    CONSTANT = "constant"
    POISSON = "poisson"


class PotentialProfile(str, Enum):
    """Analytic potentials"""

    WELL = "well"
    SINE = "sine"


@dataclass(frozen=True)
class FieldSpec:
    """
    Electric field description

    PRESCRIBED uses an analytic potential (``profile`` and ``amplitude``), CONSTANT a
    uniform field ``strength`` with Φ = -strength x, POISSON the self-consistent
    solve with ``debye_gamma``, ``applied_voltage`` and ``doping``.
    """

    mode: FieldMode = FieldMode.CONSTANT
    profile: PotentialProfile = PotentialProfile.WELL
    amplitude: float = 1.0
    well_constant: float = WELL_CONSTANT
    strength: float = 0.0
    debye_gamma: float = 0.002
    applied_voltage: float = 5.0
    doping: DopingProfile = field(default_factory=DopingProfile)

    def __post_init__(self):
        object.__setattr__(self, "mode", FieldMode(self.mode))
        object.__setattr__(self, "profile", PotentialProfile(self.profile))
        if self.mode is FieldMode.POISSON and self.debye_gamma <= 0:
            raise ValueError(f"debye_gamma must be positive, got {self.debye_gamma}")


def prescribed_field(spec: FieldSpec, x: jax.Array):
    """
    Analytic potential and field E = -Φ'

    :param spec: PRESCRIBED or CONSTANT field specification
    :param x: Positions
    :return: (Φ(x), E(x))
    :raises ValueError: For self-consistent specifications
    """
    x = jnp.asarray(x)
    if spec.mode is FieldMode.CONSTANT:
        return -spec.strength * x, jnp.full_like(x, spec.strength)
    if spec.mode is not FieldMode.PRESCRIBED:
        raise ValueError("A self-consistent field has no analytic form")

    if spec.profile is PotentialProfile.WELL:
        offset = 0.25 - x
        potential = spec.amplitude * jnp.exp(-spec.well_constant * offset**2)
        return potential, -2.0 * spec.well_constant * offset * potential

    phase = 2.0 * jnp.pi * x
    return spec.amplitude / (2.0 * jnp.pi) * jnp.sin(phase), -spec.amplitude * jnp.cos(phase)


class ElectricField:
    """
    Field provider used during time stepping

    Prescribed fields are evaluated once; the Poisson field is recomputed from the
    density on every call to ``evaluate``.
    """

    def __init__(self, spec: FieldSpec, grid: SpatialGrid):
        self._spec = spec
        self._grid = grid
        self._fixed: Optional[FieldState] = None
        if spec.mode is not FieldMode.POISSON:
            potential, efield = prescribed_field(spec, grid.centers)
            walls = prescribed_field(spec, jnp.array([grid.x_lo, grid.x_hi]))[1]
            self._fixed = FieldState(potential, efield, float(walls[0]), float(walls[1]))

    @property
    def spec(self) -> FieldSpec:
        """
        :return: Field specification
        """
        return self._spec

    @property
    def self_consistent(self) -> bool:
        """
        :return: True when the field depends on the density
        """
        return self._fixed is None

    def evaluate(self, rho: Optional[jax.Array] = None) -> FieldState:
        """
        :param rho: Density at the cell centres, required for the Poisson field
        :return: FieldState
        :raises NumericalFailure: When the density handed to the Poisson solve is not finite
        """
        if self._fixed is not None:
            return self._fixed
        if rho is None:
            raise ValueError("The Poisson field needs the density")
        if not check_finite(rho):
            raise NumericalFailure("Non-finite density entering the Poisson solve")
        spec = self._spec
        return solve_poisson(rho, spec.debye_gamma, spec.applied_voltage, spec.doping, self._grid)
