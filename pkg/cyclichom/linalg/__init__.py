"""Exact sparse linear algebra over the rationals and prime fields."""

from cyclichom.linalg.elimination import (
    EchelonBasis,
    Subquotient,
    kernel_basis,
    preimage,
    rank,
    subquotient,
)
from cyclichom.linalg.field import FieldSpec, Scalar
from cyclichom.linalg.matrices import DenseVector, SparseMatrix

__all__ = [
    "DenseVector",
    "EchelonBasis",
    "FieldSpec",
    "Scalar",
    "SparseMatrix",
    "Subquotient",
    "kernel_basis",
    "preimage",
    "rank",
    "subquotient",
]
