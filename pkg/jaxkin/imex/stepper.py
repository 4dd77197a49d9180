"""
IMEX Runge-Kutta integrator for the penalized parity system

    φ_t = -Γ(Ψ*, Φ, α_v) + E(ψ_v - 2vψ) + G + (Q̃ - L̃)(φ)/ε²
          + [β(ρ - φ)/ε² + μ (v²/λ) φ_xx]
    ψ_t = -[λψ + Γ(φ, ψ, α_u) - E(φ_v - 2vφ)]/ε²

with Ψ* = ψ + (μ/λ) Γ(φ, ψ, α_u). Bracketed terms and the whole ψ equation are
implicit; the stages are solved in partitioned order, φ first.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import jax
import jax.numpy as jnp
import numpy as np
from scipy.linalg import LinAlgError, lu_factor, lu_solve

from ..boundary import GhostFiller, PaddedState, fill_reflected
from ..collision import KernelSpec, penalization, penalized_residue
from ..errors import NumericalFailure
from ..field import ElectricField, FieldState
from ..spatial import (
    SpatialGrid,
    ViscosityPair,
    laplacian_matrix,
    laplacian_wall_term,
    second_derivative,
    stencil_radius,
    transport_divergence,
    trim,
)
from ..utils import check_finite
from ..velocity import GaussHermiteBasis, density, velocity_derivative
from .linear import VelocityOperators
from .state import ParityState, make_state
from .tableaux import DoubleButcherTableau, classify

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class StepContext:
    """Read-only description of the discrete problem advanced by the stepper"""

    basis: GaussHermiteBasis
    kernel: KernelSpec
    grid: SpatialGrid
    viscosities: ViscosityPair
    field: ElectricField
    source: jax.Array
    mu: float
    epsilon: float
    tableau: DoubleButcherTableau
    ghosts: GhostFiller
    weno_order: int = 3
    laplacian_order: int = 2

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if jnp.shape(self.source) != (self.grid.nx,):
            raise ValueError(f"source must have shape ({self.grid.nx},), got {jnp.shape(self.source)}")
        if self.grid.ghost < 2 * stencil_radius(self.weno_order):
            raise ValueError("The grid needs two stencil radii of ghost cells to compose transport operators")


def field_term(basis: GaussHermiteBasis, g: jax.Array, efield: jax.Array) -> jax.Array:
    """
    E (g_v - 2 v g), the φ-representation of E ∂_v(g M)/M

    :param basis: Velocity basis
    :param g: Nodal values, shape (nx, nv)
    :param efield: E at the cell centres
    :return: Array of the shape of g
    """
    return efield[:, None] * (velocity_derivative(basis, g) - 2.0 * basis.nodes * g)


def _psi_transport(ctx: StepContext, padded: PaddedState) -> jax.Array:
    # Γ(Φ, Ψ, α_u) on the interior extended by (ghost - r) cells per side
    return transport_divergence(
        ctx.grid, ctx.basis.nodes, padded.phi, padded.psi, ctx.viscosities.alpha_u, ctx.weno_order
    )


def psi_star(ctx: StepContext, padded: PaddedState) -> jax.Array:
    """
    Ψ* = ψ + (μ/λ) Γ(φ, ψ, α_u) on the interior extended by (ghost - r) cells per side

    Inside the domain the O(1/ε) parts of ψ and of the transport cancel. Across a
    Robin wall the reflected ghosts do not preserve that cancellation, so Ψ* is
    then taken on the interior only and reflected through its wall value
    ψ_w + (μ v/λ) ∂_x φ_w.

    :param ctx: Step context
    :param padded: φ and ψ with filled ghosts
    :return: Ψ*
    """
    r = stencil_radius(ctx.weno_order)
    star = trim(padded.psi, r)
    if not ctx.mu:
        return star
    star = star + ctx.mu / ctx.kernel.collision_frequency * _psi_transport(ctx, padded)
    walls = padded.walls
    if walls is None or walls.dphi_left is None:
        return star

    drift = ctx.mu * ctx.basis.nodes / ctx.kernel.collision_frequency
    layers = ctx.grid.ghost - r
    reflected = fill_reflected(
        ctx.grid,
        trim(star, layers),
        walls.psi_left + drift * walls.dphi_left,
        walls.psi_right + drift * walls.dphi_right,
    )
    return trim(reflected, r)


def explicit_rhs(ctx: StepContext, padded: PaddedState, phi: jax.Array, psi: jax.Array, field: FieldState) -> jax.Array:
    """
    Explicit part of the φ equation

    :param ctx: Step context
    :param padded: φ and ψ with filled ghosts
    :param phi: Interior φ
    :param psi: Interior ψ
    :param field: Electric field
    :return: -Γ(Ψ*, Φ, α_v) + E(ψ_v - 2vψ) + G + (Q̃ - L̃)(φ)/ε²
    """
    r = stencil_radius(ctx.weno_order)
    outer = transport_divergence(
        ctx.grid, ctx.basis.nodes, psi_star(ctx, padded), trim(padded.phi, r), ctx.viscosities.alpha_v, ctx.weno_order
    )
    transport = trim(outer, ctx.grid.ghost - 2 * r)
    residue = penalized_residue(ctx.kernel, ctx.basis, phi) / ctx.epsilon**2
    return -transport + field_term(ctx.basis, psi, field.efield) + ctx.source[:, None] + residue


def implicit_phi_rhs(ctx: StepContext, padded: PaddedState, phi: jax.Array) -> jax.Array:
    """
    Implicit part of the φ equation, β(ρ - φ)/ε² + μ (v²/λ) φ_xx

    :param ctx: Step context
    :param padded: φ with filled ghosts
    :param phi: Interior φ
    :return: Array of the shape of phi
    """
    rhs = penalization(ctx.basis, phi, ctx.kernel.penalty_beta) / ctx.epsilon**2
    if ctx.mu:
        diff = ctx.basis.nodes**2 / ctx.kernel.collision_frequency
        rhs = rhs + ctx.mu * diff * second_derivative(ctx.grid, padded.phi, ctx.laplacian_order)
    return rhs


def implicit_psi_rhs(
    ctx: StepContext, padded: PaddedState, phi: jax.Array, psi: jax.Array, field: FieldState
) -> jax.Array:
    """
    Right hand side of the ψ equation, -[λψ + Γ(φ, ψ, α_u) - E(φ_v - 2vφ)]/ε²
    """
    r = stencil_radius(ctx.weno_order)
    transport = trim(_psi_transport(ctx, padded), ctx.grid.ghost - r)
    relaxation = ctx.kernel.collision_frequency * psi + transport - field_term(ctx.basis, phi, field.efield)
    return -relaxation / ctx.epsilon**2


def _accumulate(base: jax.Array, dt: float, terms: Sequence[Tuple[float, Optional[jax.Array]]]) -> jax.Array:
    increment = None
    for coeff, term in terms:
        if coeff == 0.0:
            continue
        increment = coeff * term if increment is None else increment + coeff * term
    return base if increment is None else base + dt * increment


class ImexStepper:
    """
    Advances a ParityState by one IMEX step

    Implicit operators depend on Δt a_kk only and are factorized once per distinct
    value: the per-velocity operators (1 + a)I - c μ d_j Δ_j and the LU factors of
    the density Schur complement for φ, the scaled per-velocity operators for ψ.
    Δ_j is the φ Laplacian with the Robin wall relation folded in, so the walls
    move with the stage instead of lagging behind it.

    # Example usage:
    stepper = ImexStepper(context)
    state = stepper.step(state, dt)
    """

    def __init__(self, context: StepContext):
        self._ctx = context
        self._classification = classify(context.tableau)
        grid, basis, kernel = context.grid, context.basis, context.kernel
        periodic = context.ghosts.periodic

        self._periodic = periodic
        self._diff = np.asarray(basis.nodes**2 / kernel.collision_frequency)
        self._weights = np.asarray(basis.weights)
        self._lap_phi = np.asarray(
            laplacian_matrix(grid.nx, grid.dx, context.laplacian_order, context.ghosts.phi_closure)
        )
        self._second_psi = np.asarray(laplacian_matrix(grid.nx, 1.0, 2, context.ghosts.psi_closure))
        self._dissipation = context.viscosities.alpha_u * jnp.abs(basis.nodes) / (2.0 * grid.dx)
        self._wall_left = np.asarray(laplacian_wall_term(grid, 1.0, 0.0, context.laplacian_order))
        self._wall_right = np.asarray(laplacian_wall_term(grid, 0.0, 1.0, context.laplacian_order))
        self._coupled = context.mu > 0 and context.ghosts.phi_wall_coupling() is not None
        self._lap_stack = self._phi_laplacians()
        self._phi_ops: Dict[float, Tuple[VelocityOperators, tuple]] = {}
        self._psi_ops: Dict[float, VelocityOperators] = {}

        logger.debug(
            "stepper %s kind=%s gsa=%s mu=%g robin=%s", context.tableau.name, self._classification.kind.value,
            self._classification.gsa, context.mu, self._coupled,
        )

    @property
    def context(self) -> StepContext:
        """
        :return: Step context
        """
        return self._ctx

    @property
    def classification(self):
        """
        :return: Classification of the tableau
        """
        return self._classification

    def _phi_laplacians(self) -> np.ndarray:
        # Δ_j = Δ_dir + e_L g_L,j^T + e_R g_R,j^T, the gains acting on the cells next to each wall
        ctx = self._ctx
        nx, nv = ctx.grid.nx, ctx.basis.nv
        stack = np.broadcast_to(self._lap_phi, (nv, nx, nx)).copy()
        if not self._coupled:
            return stack
        coupling = ctx.ghosts.phi_wall_coupling()
        gain_left = np.asarray(coupling.gain_left)
        gain_right = np.asarray(coupling.gain_right)
        order = gain_left.shape[0]
        stack[:, :, :order] += self._wall_left[None, :, None] * gain_left.T[:, None, :]
        stack[:, :, nx - order :] += self._wall_right[None, :, None] * gain_right[::-1].T[:, None, :]
        return stack

    def _phi_operators(self, c: float) -> Tuple[VelocityOperators, tuple]:
        if c not in self._phi_ops:
            ctx = self._ctx
            nx = ctx.grid.nx
            eye = np.eye(nx)
            a = c * ctx.kernel.penalty_beta / ctx.epsilon**2
            cmu_d = c * ctx.mu * self._diff
            coupled = eye[None] - cmu_d[:, None, None] * self._lap_stack
            ops = VelocityOperators(a * eye[None] + coupled, self._periodic)
            # S = Σ_j w_j M_j^{-1} (I - c μ d_j Δ_j), the a-free form of I - a Σ_j w_j M_j^{-1}
            schur = sum(self._weights[j] * ops.solve_node(j, coupled[j]) for j in range(ops.nv))
            if not np.all(np.isfinite(schur)):
                raise NumericalFailure("Density Schur complement is not finite")
            try:
                factors = lu_factor(schur, check_finite=False)
            except LinAlgError as err:
                raise NumericalFailure(f"Density Schur complement is singular: {err}") from err
            self._phi_ops[c] = (ops, factors)
        return self._phi_ops[c]

    def _psi_operators(self, shift: float) -> VelocityOperators:
        if shift not in self._psi_ops:
            ctx = self._ctx
            eye = np.eye(ctx.grid.nx)
            scaled = shift + np.asarray(ctx.kernel.collision_frequency)
            dissipation = np.asarray(self._dissipation)
            mats = scaled[:, None, None] * eye[None] - dissipation[:, None, None] * self._second_psi[None]
            self._psi_ops[shift] = VelocityOperators(mats, self._periodic)
        return self._psi_ops[shift]

    def _wall_offsets(self, field: Optional[FieldState]) -> Optional[np.ndarray]:
        # e_L offset_L + e_R offset_R, the field-dependent part of Δ_j φ
        if not self._coupled:
            return None
        e_left, e_right = (0.0, 0.0) if field is None else (float(field.e_left), float(field.e_right))
        coupling = self._ctx.ghosts.phi_wall_coupling(e_left, e_right)
        return (
            self._wall_left[:, None] * np.asarray(coupling.offset_left)[None, :]
            + self._wall_right[:, None] * np.asarray(coupling.offset_right)[None, :]
        )

    def solve_phi_stage(
        self, known: jax.Array, c: float, field: Optional[FieldState] = None
    ) -> Tuple[jax.Array, jax.Array]:
        """
        Solves Φ_j (1 + a) - c μ d_j Δ_j Φ_j = known_j + a P with P = Σ_j w_j Φ_j

        Here c = Δt a_kk, a = c β/ε² and d_j = v_j²/λ_j. The density is obtained from
        the Schur complement, then Φ_j - P from a per-velocity solve so that the
        deviation from equilibrium is not lost to cancellation when a is huge.

        :param known: Explicit accumulation, shape (nx, nv)
        :param c: Δt a_kk, zero for explicit stages
        :param field: Field entering the Robin wall offsets, zero field when omitted
        :return: (Φ, P)
        """
        basis = self._ctx.basis
        if c == 0.0:
            return known, density(basis, known)

        ctx = self._ctx
        ops, factors = self._phi_operators(c)
        cmu_d = c * ctx.mu * self._diff
        rhs = np.asarray(known, dtype=np.float64)
        offsets = self._wall_offsets(field)
        if offsets is not None:
            rhs = rhs + cmu_d * offsets

        rho = lu_solve(factors, ops.solve(rhs) @ self._weights, check_finite=False)
        lap_rho = np.einsum("jab,b->aj", self._lap_stack, rho)
        phi = rho[:, None] + ops.solve(rhs - rho[:, None] + cmu_d * lap_rho)
        return jnp.asarray(phi), jnp.asarray(rho)

    def _psi_base_rhs(self, padded: PaddedState, phi: jax.Array, field: FieldState) -> jax.Array:
        # -Γ(Φ, 0, 0) + E(Φ_v - 2vΦ), plus the wall part of the dissipation for reflected ψ
        ctx = self._ctx
        grid = ctx.grid
        r = stencil_radius(ctx.weno_order)
        central = transport_divergence(
            grid, ctx.basis.nodes, padded.phi, jnp.zeros_like(padded.phi), 0.0, ctx.weno_order
        )
        rhs = field_term(ctx.basis, phi, field.efield) - trim(central, grid.ghost - r)
        if padded.walls is not None and ctx.ghosts.psi_closure == "dirichlet":
            wall = laplacian_wall_term(grid, padded.walls.psi_left, padded.walls.psi_right, 2) * grid.dx**2
            rhs = rhs + self._dissipation * wall
        return rhs

    def solve_psi_stage(
        self, known: jax.Array, c: float, padded: PaddedState, phi: jax.Array, field: FieldState
    ) -> jax.Array:
        """
        Solves Ψ = known - (c/ε²)[λΨ + Γ(Φ, Ψ, α_u) - E(Φ_v - 2vΦ)]

        Γ splits into the reconstructed transport of the known Φ and the linear
        dissipation -(α_u|v|/(2Δx)) δ²Ψ; the system is scaled by ε²/c so its
        conditioning does not degrade as ε → 0.

        :param known: Explicit accumulation, shape (nx, nv)
        :param c: Δt a_kk, zero for explicit stages
        :param padded: Φ with filled ghosts and the wall values of ψ
        :param phi: Interior Φ of the stage
        :param field: Electric field of the stage
        :return: Ψ
        """
        if c == 0.0:
            return known
        shift = self._ctx.epsilon**2 / c
        rhs = shift * known + self._psi_base_rhs(padded, phi, field)
        return jnp.asarray(self._psi_operators(shift).solve(rhs))

    def equilibrium_psi(self, phi: jax.Array, field: Optional[FieldState] = None) -> jax.Array:
        """
        ψ that zeroes the discrete right hand side of the ψ equation for a given φ

        Solves λΨ + Γ(φ, Ψ, α_u) - E(φ_v - 2vφ) = 0, the c → ∞ limit of solve_psi_stage.

        :param phi: Interior φ, shape (nx, nv)
        :param field: Electric field, evaluated from the density of φ when omitted
        :return: Ψ
        """
        ctx = self._ctx
        if field is None:
            field = ctx.field.evaluate(density(ctx.basis, phi))
        padded = ctx.ghosts.fill(phi, jnp.zeros_like(phi), field)
        return jnp.asarray(self._psi_operators(0.0).solve(self._psi_base_rhs(padded, phi, field)))

    def step(self, state: ParityState, dt: float) -> ParityState:
        """
        One IMEX step of size dt

        :param state: Current state
        :param dt: Time step
        :return: New state at state.time + dt
        :raises NumericalFailure: When a stage produces non-finite values
        """
        if dt <= 0:
            raise ValueError(f"dt must be positive, got {dt}")
        ctx = self._ctx
        tab = ctx.tableau
        nu = tab.nu
        a_ex, a_im = tab.a_ex, tab.a_im
        gsa = self._classification.gsa

        field = ctx.field.evaluate(state.rho)
        phi_prev, psi_prev = state.phi, state.psi
        fe: List[Optional[jax.Array]] = [None] * nu
        fi: List[Optional[jax.Array]] = [None] * nu
        gi: List[Optional[jax.Array]] = [None] * nu

        for k in range(nu):
            known_phi = _accumulate(
                state.phi, dt, [(a_ex[k, l], fe[l]) for l in range(k)] + [(a_im[k, l], fi[l]) for l in range(k)]
            )
            known_psi = _accumulate(state.psi, dt, [(a_im[k, l], gi[l]) for l in range(k)])
            c = dt * a_im[k, k]

            phi_k, rho_k = self.solve_phi_stage(known_phi, c, field)
            if not check_finite(phi_k, rho_k):
                raise NumericalFailure("Non-finite stage density", time=state.time, stage=k + 1)
            if ctx.field.self_consistent:
                field = ctx.field.evaluate(rho_k)
            psi_k = self.solve_psi_stage(known_psi, c, ctx.ghosts.fill(phi_k, psi_prev, field), phi_k, field)
            if not check_finite(psi_k):
                raise NumericalFailure("Non-finite stage values", time=state.time, stage=k + 1)

            padded = ctx.ghosts.fill(phi_k, psi_k, field)
            last = k == nu - 1
            if np.any(a_im[k + 1 :, k] != 0.0) or (not gsa and tab.w_im[k] != 0.0):
                if c > 0.0:
                    fi[k] = (phi_k - known_phi) / c
                    gi[k] = (psi_k - known_psi) / c
                else:
                    fi[k] = implicit_phi_rhs(ctx, padded, phi_k)
                    gi[k] = implicit_psi_rhs(ctx, padded, phi_k, psi_k, field)
            if not (gsa and last) and (np.any(a_ex[k + 1 :, k] != 0.0) or tab.w_ex[k] != 0.0):
                fe[k] = explicit_rhs(ctx, padded, phi_k, psi_k, field)
            phi_prev, psi_prev = phi_k, psi_k

        if gsa:
            phi_new, psi_new = phi_prev, psi_prev
        else:
            phi_new = _accumulate(
                state.phi, dt, [(tab.w_ex[l], fe[l]) for l in range(nu)] + [(tab.w_im[l], fi[l]) for l in range(nu)]
            )
            psi_new = _accumulate(state.psi, dt, [(tab.w_im[l], gi[l]) for l in range(nu)])
            if not check_finite(phi_new, psi_new):
                raise NumericalFailure("Non-finite update", time=state.time)

        return make_state(ctx.basis, phi_new, psi_new, state.time + dt)


@lru_cache(maxsize=8)
def stepper_for(context: StepContext) -> ImexStepper:
    """
    :param context: Step context, hashed by identity
    :return: Stepper shared by every caller holding the same context
    """
    return ImexStepper(context)


def step(state: ParityState, dt: float, context: StepContext) -> ParityState:
    """
    One IMEX step, reusing the factorized operators of earlier calls with the same context

    :param state: Current state
    :param dt: Time step
    :param context: Step context
    :return: New state
    """
    return stepper_for(context).step(state, dt)
