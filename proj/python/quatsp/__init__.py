"""Quaternionic symplectic matrix toolkit.

Matrices are numpy float64 arrays of shape (rows, cols, 4); the last axis
holds the quaternion components [w, x, y, z].
"""

from ._core import (
    NumericalError,
    NotSymplecticError,
    complete,
    decompose,
    herm_eig,
    is_admissible,
    is_invertible,
    ls_bounds,
    rebuild,
    sample_sp,
    sample_stiefel,
    study_det,
    svd,
    verify_cover,
    verify_sp2_cover,
)

__all__ = [
    "NumericalError",
    "NotSymplecticError",
    "complete",
    "decompose",
    "herm_eig",
    "is_admissible",
    "is_invertible",
    "ls_bounds",
    "rebuild",
    "sample_sp",
    "sample_stiefel",
    "study_det",
    "svd",
    "verify_cover",
    "verify_sp2_cover",
]
