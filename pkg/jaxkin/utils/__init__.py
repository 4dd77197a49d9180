"""
Array helpers used across the JaxKin sub-packages
"""
from .arrays import check_finite, check_last_axis, check_shape, check_symmetric

__all__ = ["check_finite", "check_last_axis", "check_shape", "check_symmetric"]
