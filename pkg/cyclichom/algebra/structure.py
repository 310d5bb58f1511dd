"""Finite-dimensional unital associative algebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from cyclichom.algebra.tensors import decode_index, encode_index
from cyclichom.core.errors import AlgebraMismatchError, DimensionMismatchError
from cyclichom.linalg.field import FieldSpec, Scalar
from cyclichom.linalg.matrices import DenseVector, SparseVec


@dataclass(frozen=True, eq=False)
class Algebra:
    """An algebra over ``field`` with basis b_0..b_{d-1}.

    ``structure[(i, j)]`` holds the sparse coordinates of b_i * b_j; missing pairs
    multiply to zero. Algebras compare and hash by identity; constructions are
    memoized so equal expressions yield the same object.
    """

    name: str
    field: FieldSpec
    dim: int
    basis_labels: Tuple[str, ...]
    unit: Tuple[Scalar, ...]
    structure: Mapping[Tuple[int, int], Mapping[int, Scalar]]
    inner: Optional["Algebra"] = dc_field(default=None, repr=False)
    matrix_size: Optional[int] = None
    is_ground_field: bool = False

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise DimensionMismatchError("an algebra needs dimension at least 1")
        if len(self.basis_labels) != self.dim:
            raise DimensionMismatchError(f"{len(self.basis_labels)} labels for dimension {self.dim}")
        if len(self.unit) != self.dim:
            raise DimensionMismatchError(f"unit of length {len(self.unit)} for dimension {self.dim}")
        for (i, j), coords in self.structure.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise DimensionMismatchError(f"product ({i}, {j}) outside the basis")
            if any(not 0 <= k < self.dim for k in coords):
                raise DimensionMismatchError(f"product ({i}, {j}) has coordinates outside the basis")

    @cached_property
    def fingerprint(self) -> Tuple:
        return (
            str(self.field),
            self.dim,
            self.unit,
            tuple(sorted((key, tuple(sorted(v.items()))) for key, v in self.structure.items() if v)),
        )

    @property
    def is_matrix_construction(self) -> bool:
        return self.inner is not None and self.matrix_size is not None

    def same_as(self, other: "Algebra") -> bool:
        return self is other or self.fingerprint == other.fingerprint

    def basis_product(self, i: int, j: int) -> Mapping[int, Scalar]:
        return self.structure.get((i, j), {})

    def multiply_sparse(self, x: Mapping[int, Scalar], y: Mapping[int, Scalar]) -> SparseVec:
        norm = self.field.normalize
        out: SparseVec = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.structure.get((i, j), {}).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: v for k, v in ((k, norm(v)) for k, v in out.items()) if v != 0}

    # elements are tensors of arity 1

    def element(self, coords: Sequence[object]) -> "TensorElement":
        if len(coords) != self.dim:
            raise DimensionMismatchError(f"{len(coords)} coordinates for dimension {self.dim}")
        return TensorElement.from_sparse(
            self, 1, {i: self.field.coerce(v) for i, v in enumerate(coords)}  # type: ignore[arg-type]
        )

    def basis_element(self, i: int) -> "TensorElement":
        return TensorElement.from_sparse(self, 1, {i: 1})

    def unit_element(self) -> "TensorElement":
        return TensorElement.from_sparse(self, 1, dict(enumerate(self.unit)))

    def zero(self, arity: int = 1) -> "TensorElement":
        return TensorElement(self, arity, {})

    def label(self, indices: Sequence[int]) -> str:
        return "⊗".join(self.basis_labels[i] for i in indices)

    def __repr__(self) -> str:
        return f"Algebra({self.name!r}, field={self.field}, dim={self.dim})"


@dataclass(frozen=True)
class TensorElement:
    """An element of A^{⊗arity}, stored as sparse coordinates in the lexicographic basis."""

    algebra: Algebra
    arity: int
    coords: Mapping[int, Scalar]

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise DimensionMismatchError("tensor arity must be at least 1")
        size = self.size
        if any(not 0 <= i < size for i in self.coords):
            raise DimensionMismatchError(f"coordinate outside A^⊗{self.arity}")

    @classmethod
    def from_sparse(cls, algebra: Algebra, arity: int, coords: Mapping[int, Scalar]) -> "TensorElement":
        norm = algebra.field.normalize
        return cls(algebra, arity, {i: v for i, v in ((i, norm(v)) for i, v in coords.items()) if v != 0})

    @classmethod
    def from_terms(
        cls, algebra: Algebra, arity: int, terms: Mapping[Tuple[int, ...], Scalar]
    ) -> "TensorElement":
        coords: SparseVec = {}
        for indices, v in terms.items():
            if len(indices) != arity:
                raise DimensionMismatchError(f"index tuple {indices} for arity {arity}")
            key = encode_index(indices, algebra.dim)
            coords[key] = coords.get(key, 0) + v
        return cls.from_sparse(algebra, arity, coords)

    @property
    def size(self) -> int:
        return self.algebra.dim ** self.arity

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def vector(self) -> DenseVector:
        return DenseVector.from_sparse(self.field, self.size, self.coords)

    def terms(self) -> Iterator[Tuple[Tuple[int, ...], Scalar]]:
        d = self.algebra.dim
        for flat in sorted(self.coords):
            yield decode_index(flat, d, self.arity), self.coords[flat]

    def is_zero(self) -> bool:
        return not self.coords

    def _check(self, other: "TensorElement") -> None:
        if self.algebra is not other.algebra:
            raise AlgebraMismatchError(f"{self.algebra.name} vs {other.algebra.name}")
        if self.arity != other.arity:
            raise DimensionMismatchError(f"arity {self.arity} vs {other.arity}")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        out = dict(self.coords)
        for i, v in other.coords.items():
            out[i] = out.get(i, 0) + v
        return TensorElement.from_sparse(self.algebra, self.arity, out)

    def __neg__(self) -> "TensorElement":
        return self.scale(-1)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scale(self, c: Scalar) -> "TensorElement":
        return TensorElement.from_sparse(self.algebra, self.arity, {i: c * v for i, v in self.coords.items()})

    def tensor(self, other: "TensorElement") -> "TensorElement":
        """x ⊗ y; the flat index of (i, j) is i * d^arity(y) + j."""
        if self.algebra is not other.algebra:
            raise AlgebraMismatchError(f"{self.algebra.name} vs {other.algebra.name}")
        shift = other.size
        norm = self.field.normalize
        return TensorElement(
            self.algebra,
            self.arity + other.arity,
            {i * shift + j: norm(a * b) for i, a in self.coords.items() for j, b in other.coords.items()},
        )

    def tensor_power(self, m: int) -> "TensorElement":
        if m < 1:
            raise DimensionMismatchError("tensor power must be at least 1")
        out = self
        for _ in range(m - 1):
            out = out.tensor(self)
        return out

    def format(self) -> List[str]:
        field = self.field
        return [f"{field.format(v)}*{self.algebra.label(idx)}" for idx, v in self.terms()]


@dataclass
class ValidationReport:
    """Violations of associativity and of the unit laws."""

    algebra: str
    associativity: List[Tuple[int, int, int]] = dc_field(default_factory=list)
    unit: List[Tuple[str, int]] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.associativity and not self.unit

    def lines(self) -> List[str]:
        out = [f"associativity fails for (b{i} b{j}) b{k}" for i, j, k in self.associativity]
        out += [f"{side} unit law fails for b{i}" for side, i in self.unit]
        return out


def validate(algebra: Algebra) -> ValidationReport:
    report = ValidationReport(algebra=algebra.name)
    d = algebra.dim
    mul = algebra.multiply_sparse
    for i in range(d):
        for j in range(d):
            ij = algebra.basis_product(i, j)
            for k in range(d):
                left = mul(ij, {k: 1})
                right = mul({i: 1}, algebra.basis_product(j, k))
                if left != right:
                    report.associativity.append((i, j, k))
    unit = {i: v for i, v in enumerate(algebra.unit) if v != 0}
    for i in range(d):
        if mul(unit, {i: 1}) != {i: 1}:
            report.unit.append(("left", i))
        if mul({i: 1}, unit) != {i: 1}:
            report.unit.append(("right", i))
    return report


def multiply(algebra: Algebra, x: TensorElement, y: TensorElement) -> TensorElement:
    for operand in (x, y):
        if operand.algebra is not algebra:
            raise AlgebraMismatchError(f"element of {operand.algebra.name} used in {algebra.name}")
        if operand.arity != 1:
            raise DimensionMismatchError("multiply takes elements (tensors of arity 1)")
    return TensorElement(algebra, 1, algebra.multiply_sparse(x.coords, y.coords))
