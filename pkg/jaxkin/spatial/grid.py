"""Cell-centred 1D grid with ghost layers"""
import jax
import jax.numpy as jnp

from .weno import stencil_radius


class SpatialGrid:
    """
    Uniform cell-centred grid on [x_lo, x_hi]

    Cell i has centre x_lo + (i + 1/2) dx. Padded arrays carry ``ghost`` extra
    cells on each side along axis 0; ghost values are owned by the boundary module.
    """

    def __init__(self, nx: int, x_lo: float = 0.0, x_hi: float = 1.0, ghost: int = 4):
        """Grid constructor

        Args:
            nx (int): Number of interior cells
            x_lo (float, optional): Left wall. Defaults to 0.0.
            x_hi (float, optional): Right wall. Defaults to 1.0.
            ghost (int, optional): Ghost cells per side. Defaults to 4.

        Raises:
            ValueError: When nx or ghost are not positive or the domain is empty
        """
        if nx < 1:
            raise ValueError(f"nx must be positive, got {nx}")
        if x_hi <= x_lo:
            raise ValueError(f"x_hi must be larger than x_lo, got [{x_lo}, {x_hi}]")
        if ghost < 1:
            raise ValueError(f"ghost must be positive, got {ghost}")

        self._nx = int(nx)
        self._x_lo = float(x_lo)
        self._x_hi = float(x_hi)
        self._ghost = int(ghost)
        self._dx = (self._x_hi - self._x_lo) / self._nx

    @property
    def nx(self) -> int:
        """
        :return: Number of interior cells
        """
        return self._nx

    @property
    def x_lo(self) -> float:
        """
        :return: Left wall position
        """
        return self._x_lo

    @property
    def x_hi(self) -> float:
        """
        :return: Right wall position
        """
        return self._x_hi

    @property
    def dx(self) -> float:
        """
        :return: Cell width
        """
        return self._dx

    @property
    def ghost(self) -> int:
        """
        :return: Ghost cells per side
        """
        return self._ghost

    @property
    def padded_size(self) -> int:
        """
        :return: nx + 2 ghost
        """
        return self._nx + 2 * self._ghost

    @property
    def centers(self) -> jax.Array:
        """
        :return: Interior cell centres
        """
        return self._x_lo + (jnp.arange(self._nx) + 0.5) * self._dx

    def interior(self, padded: jax.Array) -> jax.Array:
        """
        Strips the ghost layers of a padded array

        :param padded: Array with padded_size rows
        :return: The nx interior rows
        """
        return trim(padded, (padded.shape[0] - self._nx) // 2)


def trim(array: jax.Array, layers: int) -> jax.Array:
    """
    Removes ``layers`` rows from both ends of axis 0

    :param array: Input array
    :param layers: Rows removed per side
    :return: Trimmed view
    """
    if layers == 0:
        return array
    return array[layers:-layers]


def build_grid(nx: int, x_lo: float = 0.0, x_hi: float = 1.0, weno_order: int = 3) -> SpatialGrid:
    """
    Grid with enough ghost cells for two nested transport evaluations

    :param nx: Number of interior cells
    :param x_lo: Left wall
    :param x_hi: Right wall
    :param weno_order: Reconstruction order (3 or 5)
    :return: SpatialGrid with ghost = 2 * stencil radius
    """
    return SpatialGrid(nx, x_lo, x_hi, ghost=2 * stencil_radius(weno_order))
