"""Matrices of b, b', t and N on tensor powers of an algebra.

All matrices use the lexicographic tensor bases (leftmost factor most
significant) and are cached per (algebra, n); algebras hash by identity.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Tuple

from cyclichom.algebra.structure import Algebra
from cyclichom.algebra.tensors import basis_tuples, encode_index
from cyclichom.core.errors import DimensionMismatchError
from cyclichom.linalg.field import Scalar
from cyclichom.linalg.matrices import SparseMatrix

Columns = Dict[int, Dict[int, Scalar]]


def _faces(algebra: Algebra, n: int, wrap: bool) -> SparseMatrix:
    if n < 1:
        raise DimensionMismatchError(f"faces need n >= 1, got {n}")
    d = algebra.dim
    columns: Columns = {}
    for flat, tau in enumerate(basis_tuples(d, n + 1)):
        out: Dict[int, Scalar] = {}
        for i in range(n):
            sign = -1 if i % 2 else 1
            for k, c in algebra.basis_product(tau[i], tau[i + 1]).items():
                key = encode_index(tau[:i] + (k,) + tau[i + 2:], d)
                out[key] = out.get(key, 0) + sign * c
        if wrap:
            sign = -1 if n % 2 else 1
            for k, c in algebra.basis_product(tau[n], tau[0]).items():
                key = encode_index((k,) + tau[1:n], d)
                out[key] = out.get(key, 0) + sign * c
        if out:
            columns[flat] = out
    return SparseMatrix.from_columns(algebra.field, d ** n, d ** (n + 1), columns)


@lru_cache(maxsize=256)
def hochschild_b(algebra: Algebra, n: int) -> SparseMatrix:
    """b: A^⊗(n+1) -> A^⊗n, with the wrap-around term (-1)^n a_n a_0 ⊗ a_1 ⊗ ... ⊗ a_{n-1}."""
    return _faces(algebra, n, wrap=True)


@lru_cache(maxsize=256)
def bar_bprime(algebra: Algebra, n: int) -> SparseMatrix:
    """b': b without the wrap-around term."""
    return _faces(algebra, n, wrap=False)


def _rotation(algebra: Algebra, n: int, j: int) -> Columns:
    """t^j sends a_0 ⊗ ... ⊗ a_n to (-1)^(nj) a_{n+1-j} ⊗ ... ⊗ a_n ⊗ a_0 ⊗ ... ⊗ a_{n-j}."""
    d = algebra.dim
    cut = n + 1 - j
    sign = -1 if (n * j) % 2 else 1
    return {
        flat: {encode_index(tau[cut:] + tau[:cut], d): sign}
        for flat, tau in enumerate(basis_tuples(d, n + 1))
    }


@lru_cache(maxsize=256)
def cyclic_ops(algebra: Algebra, n: int) -> Tuple[SparseMatrix, SparseMatrix]:
    """(t, N) on A^⊗(n+1), N = 1 + t + ... + t^n."""
    if n < 0:
        raise DimensionMismatchError(f"cyclic operators need n >= 0, got {n}")
    size = algebra.dim ** (n + 1)
    field = algebra.field
    t = SparseMatrix.from_columns(field, size, size, _rotation(algebra, n, 1 if n else 0))
    norm: Columns = {}
    for j in range(n + 1):
        for flat, col in _rotation(algebra, n, j).items():
            target = norm.setdefault(flat, {})
            for r, v in col.items():
                target[r] = target.get(r, 0) + v
    return t, SparseMatrix.from_columns(field, size, size, norm)


@lru_cache(maxsize=256)
def one_minus_t(algebra: Algebra, n: int) -> SparseMatrix:
    t, _ = cyclic_ops(algebra, n)
    return SparseMatrix.identity(algebra.field, t.rows) - t


def norm_operator(algebra: Algebra, n: int) -> SparseMatrix:
    return cyclic_ops(algebra, n)[1]
