"""Matrices over an algebra, M_r(A), and the generalized trace to A."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from cyclichom.algebra.constructions import matrix_algebra
from cyclichom.algebra.structure import Algebra, TensorElement
from cyclichom.algebra.tensors import basis_tuples, decode_index, encode_index
from cyclichom.core.errors import (
    AlgebraMismatchError,
    DimensionMismatchError,
    NotInvertibleError,
)
from cyclichom.linalg.elimination import preimage
from cyclichom.linalg.field import Scalar
from cyclichom.linalg.matrices import SparseMatrix, SparseVec


@dataclass(frozen=True)
class MatrixOverA:
    """An r x r matrix whose entries are elements of ``algebra``."""

    algebra: Algebra
    size: int
    entries: Tuple[Tuple[TensorElement, ...], ...]

    def __post_init__(self) -> None:
        if self.size < 1:
            raise DimensionMismatchError("matrix size must be at least 1")
        if len(self.entries) != self.size or any(len(row) != self.size for row in self.entries):
            raise DimensionMismatchError(f"entries are not {self.size}x{self.size}")
        for row in self.entries:
            for x in row:
                if x.algebra is not self.algebra or x.arity != 1:
                    raise AlgebraMismatchError(f"matrix entry is not an element of {self.algebra.name}")

    # construction

    @classmethod
    def from_coords(cls, algebra: Algebra, rows: Sequence[Sequence[Sequence[object]]]) -> "MatrixOverA":
        """Entries given as coordinate lists in the basis of ``algebra``."""
        entries = tuple(tuple(algebra.element(c) for c in row) for row in rows)
        return cls(algebra, len(entries), entries)

    @classmethod
    def zero(cls, algebra: Algebra, r: int) -> "MatrixOverA":
        z = algebra.zero()
        return cls(algebra, r, tuple(tuple(z for _ in range(r)) for _ in range(r)))

    @classmethod
    def identity(cls, algebra: Algebra, r: int) -> "MatrixOverA":
        return cls.elementary_sum(algebra, r, [(i, i) for i in range(r)])

    @classmethod
    def elementary(cls, algebra: Algebra, r: int, i: int, j: int, value: TensorElement | None = None) -> "MatrixOverA":
        """The matrix with ``value`` (default 1) at (i, j), zero-based."""
        return cls.elementary_sum(algebra, r, [(i, j)], value)

    @classmethod
    def elementary_sum(
        cls, algebra: Algebra, r: int, positions: Sequence[Tuple[int, int]], value: TensorElement | None = None
    ) -> "MatrixOverA":
        value = value if value is not None else algebra.unit_element()
        zero = algebra.zero()
        if any(not (0 <= i < r and 0 <= j < r) for i, j in positions):
            raise DimensionMismatchError(f"position outside a {r}x{r} matrix")
        return cls(
            algebra,
            r,
            tuple(tuple(value if (i, j) in positions else zero for j in range(r)) for i in range(r)),
        )

    @classmethod
    def from_element(cls, x: TensorElement) -> "MatrixOverA":
        outer = x.algebra
        if not outer.is_matrix_construction or x.arity != 1:
            raise AlgebraMismatchError(f"{outer.name} elements are not matrices over a recorded algebra")
        inner, r = outer.inner, outer.matrix_size
        assert inner is not None and r is not None
        d = inner.dim
        cells: Dict[Tuple[int, int], SparseVec] = {}
        for k, v in x.coords.items():
            ij, l = divmod(k, d)
            cells.setdefault(divmod(ij, r), {})[l] = v
        return cls(
            inner,
            r,
            tuple(tuple(TensorElement(inner, 1, cells.get((i, j), {})) for j in range(r)) for i in range(r)),
        )

    # views

    @property
    def matrix_algebra(self) -> Algebra:
        return matrix_algebra(self.algebra, self.size)

    def to_element(self) -> TensorElement:
        d = self.algebra.dim
        r = self.size
        coords = {
            (i * r + j) * d + l: v
            for i, row in enumerate(self.entries)
            for j, x in enumerate(row)
            for l, v in x.coords.items()
        }
        return TensorElement(self.matrix_algebra, 1, coords)

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def format(self) -> List[List[List[str]]]:
        field = self.algebra.field
        return [[[field.format(v) for v in x.vector] for x in row] for row in self.entries]

    # arithmetic

    def _check(self, other: "MatrixOverA") -> None:
        if self.algebra is not other.algebra:
            raise AlgebraMismatchError(f"{self.algebra.name} vs {other.algebra.name}")
        if self.size != other.size:
            raise DimensionMismatchError(f"size {self.size} vs {other.size}")

    def __matmul__(self, other: "MatrixOverA") -> "MatrixOverA":
        self._check(other)
        A = self.algebra
        r = self.size
        rows = []
        for i in range(r):
            row = []
            for j in range(r):
                acc: SparseVec = {}
                for m in range(r):
                    for k, v in A.multiply_sparse(self.entries[i][m].coords, other.entries[m][j].coords).items():
                        acc[k] = acc.get(k, 0) + v
                row.append(TensorElement.from_sparse(A, 1, acc))
            rows.append(tuple(row))
        return MatrixOverA(A, r, tuple(rows))

    def __add__(self, other: "MatrixOverA") -> "MatrixOverA":
        self._check(other)
        return MatrixOverA(
            self.algebra,
            self.size,
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "MatrixOverA") -> "MatrixOverA":
        return self + other.scale(-1)

    def scale(self, c: Scalar) -> "MatrixOverA":
        return MatrixOverA(self.algebra, self.size, tuple(tuple(x.scale(c) for x in row) for row in self.entries))

    def is_idempotent(self) -> bool:
        return self @ self == self

    def inverse(self) -> "MatrixOverA":
        """Solve g x = 1 in M_r(A); in finite dimension a right inverse is two-sided."""
        outer = self.matrix_algebra
        g = self.to_element().coords
        left_mult = SparseMatrix.from_columns(
            outer.field, outer.dim, outer.dim, {k: outer.multiply_sparse(g, {k: 1}) for k in range(outer.dim)}
        )
        x = preimage(left_mult, outer.unit_element().vector)
        if x is None:
            raise NotInvertibleError(f"matrix over {self.algebra.name} is not invertible")
        return MatrixOverA.from_element(TensorElement.from_sparse(outer, 1, x.to_sparse()))

    def conjugate(self, e: "MatrixOverA") -> "MatrixOverA":
        """g e g^-1 with g = self."""
        return self @ e @ self.inverse()


def _unpack(k: int, r: int, d: int) -> Tuple[int, int, int]:
    ij, l = divmod(k, d)
    i, j = divmod(ij, r)
    return i, j, l


def _trace_term(indices: Sequence[int], r: int, d: int) -> Tuple[int, ...] | None:
    cells = [_unpack(k, r, d) for k in indices]
    n = len(cells)
    for pos, (_, j, _) in enumerate(cells):
        if j != cells[(pos + 1) % n][0]:
            return None
    return tuple(l for _, _, l in cells)


def generalized_trace(x: TensorElement) -> TensorElement:
    """tr(a_0 ⊗ ... ⊗ a_n) = sum over index cycles of (a_0)_{i0 i1} ⊗ ... ⊗ (a_n)_{in i0}."""
    outer = x.algebra
    if not outer.is_matrix_construction:
        raise AlgebraMismatchError(f"{outer.name} is not a matrix construction over a recorded algebra")
    inner, r = outer.inner, outer.matrix_size
    assert inner is not None and r is not None
    d_out, d_in = outer.dim, inner.dim
    coords: SparseVec = {}
    for flat, v in x.coords.items():
        image = _trace_term(decode_index(flat, d_out, x.arity), r, d_in)
        if image is not None:
            key = encode_index(image, d_in)
            coords[key] = coords.get(key, 0) + v
    return TensorElement.from_sparse(inner, x.arity, coords)


@lru_cache(maxsize=64)
def trace_matrix(outer: Algebra, arity: int) -> SparseMatrix:
    """The generalized trace M_r(A)^⊗arity -> A^⊗arity as a matrix."""
    if not outer.is_matrix_construction:
        raise AlgebraMismatchError(f"{outer.name} is not a matrix construction over a recorded algebra")
    inner, r = outer.inner, outer.matrix_size
    assert inner is not None and r is not None
    columns: Dict[int, Dict[int, Scalar]] = {}
    for flat, indices in enumerate(basis_tuples(outer.dim, arity)):
        image = _trace_term(indices, r, inner.dim)
        if image is not None:
            columns[flat] = {encode_index(image, inner.dim): 1}
    return SparseMatrix.from_columns(outer.field, inner.dim ** arity, outer.dim ** arity, columns)
