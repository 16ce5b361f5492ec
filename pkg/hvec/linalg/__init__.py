"""
Exact linear algebra over prime fields.
"""

from .eliminate import rank, row_reduce
from .field import DEFAULT_PRIME, FieldScalar, check_prime, inverse
from .matrix import FieldMatrix, SparseVector, stack_horizontally, stack_vertically
from .subspace import (
    Subspace,
    image_of_subspace,
    kernel_basis,
    preimage_of_subspace,
    subspace_intersection,
    subspace_sum,
    sum_of_subspaces,
)

__all__ = [
    "DEFAULT_PRIME",
    "FieldMatrix",
    "FieldScalar",
    "SparseVector",
    "Subspace",
    "check_prime",
    "image_of_subspace",
    "inverse",
    "kernel_basis",
    "preimage_of_subspace",
    "rank",
    "row_reduce",
    "stack_horizontally",
    "stack_vertically",
    "subspace_intersection",
    "subspace_sum",
    "sum_of_subspaces",
]
