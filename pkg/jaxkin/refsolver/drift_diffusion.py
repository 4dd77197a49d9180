"""
Explicit conservative solver of the drift-diffusion limit

    ρ_t = (D ρ_x + η ρ E)_x + G

used as an oracle for the diffusive regime. Interface fluxes are centred:
F_{i+1/2} = D (ρ_{i+1} - ρ_i)/Δx + η E_{i+1/2} (ρ_i + ρ_{i+1})/2.
"""
import logging
from dataclasses import dataclass
from typing import Callable, List, NamedTuple, Sequence, Tuple

import jax
import jax.numpy as jnp

from ..boundary import BoundaryKind, injected_density, maxwellian_injection
from ..collision import build_kernel
from ..field import ElectricField, FieldState
from ..imex import uniform_steps
from ..scenarios import ScenarioConfig, initial_phi, with_overrides
from ..spatial import SpatialGrid
from ..velocity import build_basis

logger = logging.getLogger(__name__)

PARABOLIC_SAFETY = 0.5


@dataclass(frozen=True)
class DriftDiffusionState:
    """Density at the cell centres and the current time"""

    rho: jax.Array
    time: float


class DDBoundary(NamedTuple):
    """Periodic wrap, or Dirichlet densities at the walls"""

    periodic: bool = True
    rho_left: float = 0.0
    rho_right: float = 0.0


class ReferenceResult(NamedTuple):
    """Density snapshots of a reference run"""

    x: jax.Array
    times: Tuple[float, ...]
    densities: Tuple[jax.Array, ...]

    @property
    def final(self) -> jax.Array:
        """
        :return: Density at the last time
        """
        return self.densities[-1]


@jax.jit
def _flux_divergence(rho_pad, e_faces, diffusion, mobility, dx):
    flux = diffusion * (rho_pad[1:] - rho_pad[:-1]) / dx + mobility * e_faces * 0.5 * (rho_pad[1:] + rho_pad[:-1])
    return (flux[1:] - flux[:-1]) / dx


def _face_field(field: FieldState, periodic: bool) -> jax.Array:
    e = field.efield
    inner = 0.5 * (e[1:] + e[:-1])
    if periodic:
        wrap = 0.5 * (e[-1] + e[0])
        return jnp.concatenate([jnp.array([wrap]), inner, jnp.array([wrap])])
    return jnp.concatenate([jnp.array([field.e_left]), inner, jnp.array([field.e_right])])


def parabolic_bound(dx: float, diffusion: float) -> float:
    """
    :return: Δx²/(2D)
    """
    return dx**2 / (2.0 * diffusion)


def dd_step(
    state: DriftDiffusionState,
    dt: float,
    diffusion: float,
    mobility: float,
    field: FieldState,
    source: jax.Array,
    grid: SpatialGrid,
    boundary: DDBoundary = DDBoundary(),
) -> DriftDiffusionState:
    """
    Forward Euler step of the conservative central scheme

    :param state: Current density
    :param dt: Time step, stable below Δx²/(2D)
    :param diffusion: D
    :param mobility: η
    :param field: Electric field at the centres and walls
    :param source: G at the centres
    :param grid: Spatial grid
    :param boundary: Periodic or Dirichlet walls
    :return: New state
    """
    if dt > parabolic_bound(grid.dx, diffusion) * (1.0 + 1e-12):
        logger.warning("dd_step dt=%g exceeds the parabolic bound %g", dt, parabolic_bound(grid.dx, diffusion))
    rho = state.rho
    if boundary.periodic:
        rho_pad = jnp.concatenate([rho[-1:], rho, rho[:1]])
    else:
        rho_pad = jnp.concatenate([2.0 * boundary.rho_left - rho[:1], rho, 2.0 * boundary.rho_right - rho[-1:]])
    div = _flux_divergence(rho_pad, _face_field(field, boundary.periodic), diffusion, mobility, grid.dx)
    return DriftDiffusionState(rho + dt * (div + source), state.time + dt)


def march(
    state,
    t_final: float,
    output_times: Sequence[float],
    dt_max: float,
    advance: Callable,
) -> Tuple[Tuple[float, ...], Tuple[object, ...]]:
    """
    Advances with equal steps between consecutive output times

    :param state: Initial state with a ``time`` attribute
    :param t_final: Final time, always recorded
    :param output_times: Intermediate snapshot times
    :param dt_max: Largest admissible step
    :param advance: Callable (state, dt) -> state
    :return: (times, states) of the snapshots
    """
    targets = sorted({float(t) for t in output_times if 0.0 < t < t_final} | {float(t_final)})
    times: List[float] = []
    states: List[object] = []
    for target in targets:
        n_steps, dt = uniform_steps(target - state.time, dt_max)
        for _ in range(n_steps):
            state = advance(state, dt)
        times.append(target)
        states.append(state)
    return tuple(times), tuple(states)


def dd_run(config: ScenarioConfig, nx: int = None) -> ReferenceResult:
    """
    Integrates the drift-diffusion limit of a scenario

    D and η = 2D come from the scenario kernel on its velocity nodes. Injection
    walls become Dirichlet walls with the injected density; the Poisson field is
    recomputed every step.

    :param config: Scenario configuration
    :param nx: Grid override
    :return: ReferenceResult at the output times and the final time
    """
    config = with_overrides(config, nx=nx)
    basis = build_basis(config.nv)
    kernel = build_kernel(config.kernel, basis, config.epi_constant, config.penalty_beta)
    grid = SpatialGrid(config.nx, config.x_lo, config.x_hi, ghost=1)
    field = ElectricField(config.field, grid)
    diffusion, mobility = kernel.diffusion, kernel.mobility

    if config.boundary.kind is BoundaryKind.PERIODIC:
        boundary = DDBoundary()
    else:
        injection = maxwellian_injection(basis, config.boundary.inflow_left, config.boundary.inflow_right)
        left, right = injected_density(basis, injection)
        boundary = DDBoundary(False, left, right)

    rho0 = initial_phi(config, grid, 1)[:, 0]
    source = jnp.full(grid.nx, config.source)

    dt_max = PARABOLIC_SAFETY * parabolic_bound(grid.dx, diffusion)
    if not field.self_consistent:
        e_max = float(jnp.max(jnp.abs(field.evaluate().efield)))
        if e_max > 0:
            dt_max = min(dt_max, grid.dx / (mobility * e_max))
    logger.info("drift-diffusion oracle %s nx=%d D=%g dt=%g", config.name, grid.nx, diffusion, dt_max)

    def advance(state: DriftDiffusionState, dt: float) -> DriftDiffusionState:
        return dd_step(state, dt, diffusion, mobility, field.evaluate(state.rho), source, grid, boundary)

    times, states = march(DriftDiffusionState(rho0, 0.0), config.t_final, config.output_times, dt_max, advance)
    return ReferenceResult(grid.centers, times, tuple(s.rho for s in states))

