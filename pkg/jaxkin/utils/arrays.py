"""
Shape and value checks for the grid arrays handled by the solver
"""
import jax
import jax.numpy as jnp


def check_shape(*args) -> bool:
    """
    Checks if the shapes of the input arrays are the same

    :param args: List of arrays
    :return: True if the shapes are the same, False otherwise
    """
    if not args:
        return False

    shape = jnp.shape(args[0])
    return all(jnp.shape(arg) == shape for arg in args[1:])


def check_last_axis(array: jax.Array, size: int, name: str = "array") -> None:
    """
    Validates the trailing (velocity) axis of an array

    :param array: Array whose last axis indexes velocity nodes
    :param size: Expected number of velocity nodes
    :param name: Name used in the error message
    :raises ValueError: When the last axis has the wrong length
    """
    shape = jnp.shape(array)
    if not shape or shape[-1] != size:
        raise ValueError(f"{name} must have {size} velocity entries on its last axis, got shape {shape}")


def check_symmetric(a: jax.Array, tol: float = 1e-8) -> bool:
    """
    Check if a matrix is symmetric

    :param a: (jax.Array): Matrix to check
    :param tol: (float): Tolerance for the check
    :return: (bool): True if the matrix is symmetric
    """
    return bool(jnp.all(jnp.abs(a - a.T) <= tol))


def check_finite(*arrays: jax.Array) -> bool:
    """
    Checks that every entry of every array is finite

    :param arrays: Arrays to inspect
    :return: True if no NaN or infinity is present
    """
    return all(bool(jnp.all(jnp.isfinite(a))) for a in arrays)
