"""
Per-velocity linear operators of the implicit stages

Every velocity node carries an nx x nx operator that couples only neighbouring
cells: banded on walled grids, circulant on periodic ones. They are stored
compactly and solved with scipy.linalg.solve_banded or solve_circulant.
"""
from typing import Tuple

import numpy as np
from scipy.linalg import LinAlgError, solve_banded, solve_circulant

from ..errors import NumericalFailure


def bandwidths(mats: np.ndarray) -> Tuple[int, int]:
    """
    :param mats: Stack of square matrices, shape (..., n, n)
    :return: (lower, upper) number of nonzero off-diagonals over the stack
    """
    rows, cols = np.nonzero(np.any(mats != 0.0, axis=tuple(range(mats.ndim - 2))))
    if rows.size == 0:
        return 0, 0
    offsets = cols - rows
    return int(max(0, -offsets.min())), int(max(0, offsets.max()))


def banded_form(mat: np.ndarray, lower: int, upper: int) -> np.ndarray:
    """
    Diagonal ordered form expected by solve_banded, ab[upper + i - j, j] = mat[i, j]

    :param mat: Square matrix
    :param lower: Number of subdiagonals
    :param upper: Number of superdiagonals
    :return: Array of shape (lower + upper + 1, n)
    """
    n = mat.shape[0]
    ab = np.zeros((lower + upper + 1, n))
    for k in range(-lower, upper + 1):
        diag = np.diagonal(mat, offset=k)
        if k >= 0:
            ab[upper - k, k:] = diag
        else:
            ab[upper - k, : n + k] = diag
    return ab


class VelocityOperators:
    """
    One nx x nx operator per velocity node, solved node by node

    # Example usage:
    ops = VelocityOperators(mats, periodic=False)
    u = ops.solve(rhs)  # rhs of shape (nx, nv)
    """

    def __init__(self, mats: np.ndarray, periodic: bool):
        """Operator stack constructor

        Args:
            mats (np.ndarray): Operators, shape (nv, nx, nx)
            periodic (bool): Whether the operators are circulant

        Raises:
            ValueError: When the stack is not made of square matrices
        """
        mats = np.asarray(mats, dtype=np.float64)
        if mats.ndim != 3 or mats.shape[1] != mats.shape[2]:
            raise ValueError(f"Expected a stack of square matrices, got shape {mats.shape}")
        self._periodic = periodic
        self._nv, self._nx = mats.shape[0], mats.shape[1]
        if periodic:
            self._columns = mats[:, :, 0].copy()
        else:
            self._bands = bandwidths(mats)
            self._ab = np.stack([banded_form(m, *self._bands) for m in mats])

    @property
    def nv(self) -> int:
        """
        :return: Number of velocity nodes
        """
        return self._nv

    def solve_node(self, j: int, rhs: np.ndarray) -> np.ndarray:
        """
        :param j: Velocity node
        :param rhs: Right hand side with nx rows, one or more columns
        :return: Solution of the shape of rhs
        :raises NumericalFailure: When the operator is singular or rhs is not finite
        """
        if not np.all(np.isfinite(rhs)):
            raise NumericalFailure(f"Non-finite right hand side at velocity node {j}")
        try:
            if self._periodic:
                return solve_circulant(self._columns[j], rhs)
            return solve_banded(self._bands, self._ab[j], rhs)
        except LinAlgError as err:
            raise NumericalFailure(f"Singular implicit operator at velocity node {j}: {err}") from err

    def solve(self, rhs: np.ndarray) -> np.ndarray:
        """
        :param rhs: Right hand sides, shape (nx, nv)
        :return: Solutions, shape (nx, nv)
        """
        rhs = np.asarray(rhs, dtype=np.float64)
        return np.stack([self.solve_node(j, rhs[:, j]) for j in range(self._nv)], axis=1)
