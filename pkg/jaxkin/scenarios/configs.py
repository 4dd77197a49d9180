"""Scenario configurations and the registry of named test problems"""
import dataclasses
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Optional, Tuple

from ..boundary import BoundaryKind, BoundarySpec
from ..collision import KernelKind
from ..errors import ConfigurationError
from ..field import DopingProfile, FieldMode, FieldSpec, PotentialProfile
from ..imex import TABLEAUX


class InitialKind(str, Enum):
    """Initial distribution f0 = φ0 M"""

    MAXWELLIAN = "maxwellian"
    VACUUM = "vacuum"
    SINE = "sine"


@dataclass(frozen=True)
class ScenarioConfig:
    """
    Full description of a simulation

    ``mu`` and ``dt`` override the regime switch and the time-step rule when set.
    """

    name: str
    t_final: float
    nx: int = 50
    nv: int = 16
    x_lo: float = 0.0
    x_hi: float = 1.0
    epsilon: float = 1.0
    kernel: KernelKind = KernelKind.RTA
    epi_constant: float = 0.1
    penalty_beta: float = 1.0
    scheme: str = "ars222"
    c_h: float = 0.5
    c_m: float = 0.5
    field: FieldSpec = dataclasses.field(default_factory=FieldSpec)
    source: float = 0.0
    boundary: BoundarySpec = dataclasses.field(default_factory=BoundarySpec)
    initial: InitialKind = InitialKind.MAXWELLIAN
    initial_amplitude: float = 0.5
    well_prepared: bool = False
    weno_order: int = 3
    output_times: Tuple[float, ...] = ()
    mu: Optional[float] = None
    dt: Optional[float] = None

    def __post_init__(self):
        try:
            object.__setattr__(self, "kernel", KernelKind(self.kernel))
            object.__setattr__(self, "initial", InitialKind(self.initial))
        except ValueError as err:
            raise ConfigurationError(str(err)) from err
        object.__setattr__(self, "output_times", tuple(sorted(float(t) for t in self.output_times)))

        if self.nx < 4:
            raise ConfigurationError(f"nx must be at least 4, got {self.nx}")
        if self.nv < 2 or self.nv % 2:
            raise ConfigurationError(f"nv must be an even integer >= 2, got {self.nv}")
        if self.x_hi <= self.x_lo:
            raise ConfigurationError("x_hi must be larger than x_lo")
        for name in ("epsilon", "t_final", "c_h", "c_m", "epi_constant", "penalty_beta"):
            if getattr(self, name) <= 0:
                raise ConfigurationError(f"{name} must be positive, got {getattr(self, name)}")
        if self.scheme not in TABLEAUX:
            raise ConfigurationError(f"Unknown scheme {self.scheme!r}, expected one of {sorted(TABLEAUX)}")
        if self.weno_order not in (3, 5):
            raise ConfigurationError(f"weno_order must be 3 or 5, got {self.weno_order}")
        if self.dt is not None and self.dt <= 0:
            raise ConfigurationError(f"dt must be positive, got {self.dt}")
        if any(t <= 0 or t > self.t_final for t in self.output_times):
            raise ConfigurationError("output_times must lie in (0, t_final]")

    @property
    def dx(self) -> float:
        """
        :return: Cell width
        """
        return (self.x_hi - self.x_lo) / self.nx


_INJECTION = BoundarySpec(kind=BoundaryKind.INJECTION, inflow_left=1.0, inflow_right=1.0)
_WELL = FieldSpec(mode=FieldMode.PRESCRIBED, profile=PotentialProfile.WELL)
_SLOPE = FieldSpec(mode=FieldMode.CONSTANT, strength=-1.0)


def test1_kinetic() -> ScenarioConfig:
    """Potential well, kinetic regime"""
    return ScenarioConfig("test1_kinetic", t_final=0.08, epsilon=1.0, c_h=0.5, field=_WELL, boundary=_INJECTION)


def test1_fluid() -> ScenarioConfig:
    """Potential well, diffusive regime"""
    return ScenarioConfig("test1_fluid", t_final=0.03, epsilon=0.002, c_m=0.5, field=_WELL, boundary=_INJECTION)


def test2_kinetic() -> ScenarioConfig:
    """Flat source in an empty slab under E = -1, kinetic regime"""
    return ScenarioConfig(
        "test2_kinetic",
        t_final=0.5,
        epsilon=1.0,
        field=_SLOPE,
        source=1.0,
        initial=InitialKind.VACUUM,
        boundary=BoundarySpec(kind=BoundaryKind.INJECTION, inflow_left=0.0, inflow_right=0.0),
    )


def test2_fluid() -> ScenarioConfig:
    """Flat source in an empty slab under E = -1, diffusive regime"""
    return ScenarioConfig(
        "test2_fluid",
        t_final=0.1,
        nx=20,
        epsilon=0.001,
        c_m=0.5,
        field=_SLOPE,
        source=1.0,
        initial=InitialKind.VACUUM,
        boundary=BoundarySpec(kind=BoundaryKind.INJECTION, inflow_left=0.0, inflow_right=0.0),
    )


def test3() -> ScenarioConfig:
    """n+ n n+ diode with the self-consistent field"""
    return ScenarioConfig(
        "test3",
        t_final=0.04,
        epsilon=0.001,
        c_m=0.1,
        field=FieldSpec(
            mode=FieldMode.POISSON,
            debye_gamma=0.002,
            applied_voltage=5.0,
            doping=DopingProfile(s=0.02, m=0.001, x1=0.3, x2=0.7),
        ),
        boundary=BoundarySpec(kind=BoundaryKind.INJECTION, inflow_left=1.0, inflow_right=1.0, psi_neumann=True),
    )


def smooth_periodic() -> ScenarioConfig:
    """Smooth periodic problem for order and conservation measurements"""
    return ScenarioConfig(
        "smooth_periodic",
        t_final=0.1,
        epsilon=1.0,
        field=FieldSpec(mode=FieldMode.PRESCRIBED, profile=PotentialProfile.SINE, amplitude=0.5),
        initial=InitialKind.SINE,
        initial_amplitude=0.5,
        well_prepared=True,
    )


SCENARIOS: Dict[str, Callable[[], ScenarioConfig]] = {
    "test1_kinetic": test1_kinetic,
    "test1_fluid": test1_fluid,
    "test2_kinetic": test2_kinetic,
    "test2_fluid": test2_fluid,
    "test3": test3,
    "smooth_periodic": smooth_periodic,
}


def scenario(name: str) -> ScenarioConfig:
    """
    :param name: Registered scenario name
    :return: Its configuration
    :raises ConfigurationError: For unknown names
    """
    try:
        return SCENARIOS[name]()
    except KeyError as err:
        raise ConfigurationError(f"Unknown scenario {name!r}, expected one of {sorted(SCENARIOS)}") from err
