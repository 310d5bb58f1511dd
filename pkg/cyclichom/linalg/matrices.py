"""Immutable sparse matrices and dense vectors over an exact field."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from cyclichom.core.errors import DimensionMismatchError, FieldMismatchError
from cyclichom.linalg.field import FieldSpec, Scalar

SparseVec = Dict[int, Scalar]


def _same_field(a: FieldSpec, b: FieldSpec) -> None:
    if a != b:
        raise FieldMismatchError(f"field mismatch: {a} vs {b}")


@dataclass(frozen=True)
class DenseVector:
    field: FieldSpec
    coords: Tuple[Scalar, ...]

    @classmethod
    def zeros(cls, field: FieldSpec, length: int) -> "DenseVector":
        return cls(field, (0,) * length)

    @classmethod
    def of(cls, field: FieldSpec, values: Iterable[object]) -> "DenseVector":
        return cls(field, tuple(field.coerce(v) for v in values))  # type: ignore[arg-type]

    @classmethod
    def from_sparse(cls, field: FieldSpec, length: int, entries: Mapping[int, Scalar]) -> "DenseVector":
        coords: List[Scalar] = [0] * length
        for i, v in entries.items():
            if not 0 <= i < length:
                raise DimensionMismatchError(f"index {i} outside length {length}")
            coords[i] = field.normalize(v)
        return cls(field, tuple(coords))

    @property
    def length(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.coords)

    def __getitem__(self, i: int) -> Scalar:
        return self.coords[i]

    def to_sparse(self) -> SparseVec:
        return {i: v for i, v in enumerate(self.coords) if v != 0}

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.coords)

    def _check(self, other: "DenseVector") -> None:
        _same_field(self.field, other.field)
        if self.length != other.length:
            raise DimensionMismatchError(f"length {self.length} vs {other.length}")

    def __add__(self, other: "DenseVector") -> "DenseVector":
        self._check(other)
        norm = self.field.normalize
        return DenseVector(self.field, tuple(norm(a + b) for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DenseVector") -> "DenseVector":
        self._check(other)
        norm = self.field.normalize
        return DenseVector(self.field, tuple(norm(a - b) for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "DenseVector":
        return self.scale(-1)

    def scale(self, c: Scalar) -> "DenseVector":
        norm = self.field.normalize
        return DenseVector(self.field, tuple(norm(c * a) for a in self.coords))

    def format(self) -> List[str]:
        return [self.field.format(v) for v in self.coords]


@dataclass(frozen=True)
class SparseMatrix:
    """A rows x cols matrix stored column-wise; stored values are nonzero."""

    field: FieldSpec
    rows: int
    cols: int
    columns: Mapping[int, Mapping[int, Scalar]]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError("negative matrix dimension")
        p = self.field.p
        for c, col in self.columns.items():
            if not 0 <= c < self.cols:
                raise DimensionMismatchError(f"column {c} outside 0..{self.cols - 1}")
            for r, v in col.items():
                if not 0 <= r < self.rows:
                    raise DimensionMismatchError(f"row {r} outside 0..{self.rows - 1}")
                if v == 0:
                    raise ValueError(f"stored zero at ({r}, {c})")
                if p is not None and not (isinstance(v, int) and 0 <= v < p):
                    raise FieldMismatchError(f"entry {v!r} at ({r}, {c}) is not an element of {self.field}")

    # construction

    @classmethod
    def from_columns(
        cls, field: FieldSpec, rows: int, cols: int, columns: Mapping[int, Mapping[int, Scalar]]
    ) -> "SparseMatrix":
        norm = field.normalize
        clean: Dict[int, Dict[int, Scalar]] = {}
        for c, col in columns.items():
            kept = {}
            for r, v in col.items():
                v = norm(v)
                if v != 0:
                    kept[r] = v
            if kept:
                clean[c] = kept
        return cls(field, rows, cols, clean)

    @classmethod
    def from_entries(
        cls, field: FieldSpec, rows: int, cols: int, entries: Mapping[Tuple[int, int], Scalar]
    ) -> "SparseMatrix":
        columns: Dict[int, Dict[int, Scalar]] = {}
        for (r, c), v in entries.items():
            columns.setdefault(c, {})[r] = v
        return cls.from_columns(field, rows, cols, columns)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[object]]) -> "SparseMatrix":
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        entries = {}
        for r, row in enumerate(rows):
            if len(row) != n_cols:
                raise DimensionMismatchError("ragged rows")
            for c, v in enumerate(row):
                entries[(r, c)] = field.coerce(v)  # type: ignore[arg-type]
        return cls.from_entries(field, n_rows, n_cols, entries)

    @classmethod
    def zero(cls, field: FieldSpec, rows: int, cols: int) -> "SparseMatrix":
        return cls(field, rows, cols, {})

    @classmethod
    def identity(cls, field: FieldSpec, n: int, scale: Scalar = 1) -> "SparseMatrix":
        return cls.from_columns(field, n, n, {i: {i: scale} for i in range(n)})

    @classmethod
    def blocks(
        cls,
        field: FieldSpec,
        rows: int,
        cols: int,
        placed: Iterable[Tuple[int, int, "SparseMatrix"]],
    ) -> "SparseMatrix":
        """Sum of blocks placed at (row offset, column offset)."""
        columns: Dict[int, Dict[int, Scalar]] = {}
        for r0, c0, block in placed:
            _same_field(field, block.field)
            if r0 + block.rows > rows or c0 + block.cols > cols:
                raise DimensionMismatchError("block does not fit")
            for c, col in block.columns.items():
                target = columns.setdefault(c0 + c, {})
                for r, v in col.items():
                    target[r0 + r] = target.get(r0 + r, 0) + v
        return cls.from_columns(field, rows, cols, columns)

    # views

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> Dict[Tuple[int, int], Scalar]:
        return {(r, c): v for c, col in self.columns.items() for r, v in col.items()}

    @cached_property
    def row_map(self) -> Dict[int, Dict[int, Scalar]]:
        out: Dict[int, Dict[int, Scalar]] = {}
        for c in sorted(self.columns):
            for r, v in self.columns[c].items():
                out.setdefault(r, {})[c] = v
        return out

    def column(self, c: int) -> SparseVec:
        return dict(self.columns.get(c, {}))

    def nnz(self) -> int:
        return sum(len(col) for col in self.columns.values())

    def is_zero(self) -> bool:
        return not self.columns

    def to_rows(self) -> List[List[Scalar]]:
        dense: List[List[Scalar]] = [[0] * self.cols for _ in range(self.rows)]
        for c, col in self.columns.items():
            for r, v in col.items():
                dense[r][c] = v
        return dense

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.field, self.cols, self.rows, {r: dict(row) for r, row in self.row_map.items()})

    # arithmetic

    def _check_same_shape(self, other: "SparseMatrix") -> None:
        _same_field(self.field, other.field)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check_same_shape(other)
        return SparseMatrix.blocks(self.field, self.rows, self.cols, [(0, 0, self), (0, 0, other)])

    def __neg__(self) -> "SparseMatrix":
        return self.scale(-1)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scale(self, c: Scalar) -> "SparseMatrix":
        return SparseMatrix.from_columns(
            self.field, self.rows, self.cols,
            {j: {r: c * v for r, v in col.items()} for j, col in self.columns.items()},
        )

    def apply_sparse(self, vec: Mapping[int, Scalar]) -> SparseVec:
        norm = self.field.normalize
        out: SparseVec = {}
        for c, x in vec.items():
            if x == 0:
                continue
            for r, v in self.columns.get(c, {}).items():
                out[r] = out.get(r, 0) + v * x
        return {r: w for r, w in ((r, norm(w)) for r, w in out.items()) if w != 0}

    def apply(self, v: DenseVector) -> DenseVector:
        _same_field(self.field, v.field)
        if v.length != self.cols:
            raise DimensionMismatchError(f"vector of length {v.length} for {self.cols} columns")
        return DenseVector.from_sparse(self.field, self.rows, self.apply_sparse(v.to_sparse()))

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        _same_field(self.field, other.field)
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot compose {self.shape} with {other.shape}")
        return SparseMatrix(
            self.field, self.rows, other.cols,
            {c: res for c, col in other.columns.items() if (res := self.apply_sparse(col))},
        )
