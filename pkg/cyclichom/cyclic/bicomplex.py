"""Layouts of the cyclic bicomplex, chains in its total complex and the total differential.

Entry (p, q) is A^⊗(q+1). The vertical differential is b on even columns and
-b' on odd columns; the horizontal one into column p-1 is 1-t for odd p and N
for even p. The total differential is the plain sum of these blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

import structlog

from cyclichom.algebra.structure import Algebra, TensorElement
from cyclichom.core.config import settings
from cyclichom.core.enums import LayoutKind
from cyclichom.core.errors import (
    AlgebraMismatchError,
    DimensionMismatchError,
    GuardrailExceededError,
    TruncationError,
)
from cyclichom.cyclic.operators import bar_bprime, hochschild_b, norm_operator, one_minus_t
from cyclichom.linalg.field import Scalar
from cyclichom.linalg.matrices import DenseVector, SparseMatrix

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class BicomplexLayout:
    """A finite window of a cyclic bicomplex.

    ``FIRST_QUADRANT`` is CC(A) (columns p >= 0). ``HOCHSCHILD`` is column 0 alone
    with differential b. ``NEGATIVE`` is the left-extended bicomplex (columns
    p <= 0) modulo its columns p < min_col; entries left of ``min_col`` are
    dropped silently, entries beyond ``max_col`` or ``max_row`` are a
    truncation error.
    """

    algebra: Algebra
    kind: LayoutKind
    min_col: int
    max_col: int
    max_row: int

    @classmethod
    def first_quadrant(cls, algebra: Algebra, n: int) -> "BicomplexLayout":
        """Columns 0..n+1 and rows 0..n+1: enough for degrees n and n+1."""
        return cls(algebra, LayoutKind.FIRST_QUADRANT, 0, n + 1, n + 1)

    @classmethod
    def hochschild(cls, algebra: Algebra, n: int) -> "BicomplexLayout":
        return cls(algebra, LayoutKind.HOCHSCHILD, 0, 0, n + 1)

    @classmethod
    def negative(cls, algebra: Algebra, window: int) -> "BicomplexLayout":
        """Columns -2M..0: degree 0 holds rows 0..2M, degree 1 rows 1..2M+1."""
        if window < 0:
            raise DimensionMismatchError(f"window must be >= 0, got {window}")
        return cls(algebra, LayoutKind.NEGATIVE, -2 * window, 0, 2 * window + 1)

    @property
    def window(self) -> Optional[int]:
        return -self.min_col // 2 if self.kind == LayoutKind.NEGATIVE else None

    def with_algebra(self, algebra: Algebra) -> "BicomplexLayout":
        return BicomplexLayout(algebra, self.kind, self.min_col, self.max_col, self.max_row)

    def _column_range(self, m: int) -> range:
        if self.kind == LayoutKind.FIRST_QUADRANT:
            lo, hi = 0, m
        elif self.kind == LayoutKind.HOCHSCHILD:
            lo, hi = 0, min(0, m)
        else:
            lo, hi = self.min_col, min(0, m)
        return range(max(lo, self.min_col), hi + 1)

    def entries(self, m: int) -> List[Tuple[int, int]]:
        """(column, row) pairs of Tot_m in increasing column order."""
        out = []
        for p in self._column_range(m):
            q = m - p
            if p > self.max_col or q > self.max_row:
                raise TruncationError(
                    f"degree {m} needs entry ({p}, {q}) outside columns {self.min_col}..{self.max_col}, "
                    f"rows 0..{self.max_row}"
                )
            out.append((p, q))
        return out

    def blocks(self, m: int) -> List[Tuple[int, int, int]]:
        """(column, row, offset) of each entry inside the flattened Tot_m."""
        d = self.algebra.dim
        offset = 0
        out = []
        for p, q in self.entries(m):
            out.append((p, q, offset))
            offset += d ** (q + 1)
        return out

    def dimension(self, m: int) -> int:
        d = self.algebra.dim
        return sum(d ** (q + 1) for _, q in self.entries(m))

    def required_size(self) -> int:
        """Largest tensor-power dimension the window touches."""
        return self.algebra.dim ** (self.max_row + 1)

    def describe(self) -> str:
        return f"{self.kind.value} columns {self.min_col}..{self.max_col} rows 0..{self.max_row}"


def check_guardrail(layout: BicomplexLayout, cap: Optional[int] = None, force: bool = False) -> None:
    cap = settings.cap if cap is None else cap
    required = layout.required_size()
    if required > cap and not force:
        logger.warning("guardrail refused", algebra=layout.algebra.name, required=required, cap=cap)
        raise GuardrailExceededError(
            f"{layout.algebra.name}: tensor power of dimension {required} exceeds the cap {cap}",
            required=required,
            cap=cap,
        )


@lru_cache(maxsize=512)
def total_differential(layout: BicomplexLayout, m: int) -> SparseMatrix:
    """d: Tot_m -> Tot_{m-1} as a block matrix."""
    algebra = layout.algebra
    field = algebra.field
    sources = layout.blocks(m)
    targets = {(p, q): off for p, q, off in layout.blocks(m - 1)}
    placed: List[Tuple[int, int, SparseMatrix]] = []
    for p, q, col_off in sources:
        if q >= 1:
            vertical = hochschild_b(algebra, q) if p % 2 == 0 else bar_bprime(algebra, q).scale(-1)
            placed.append((targets[(p, q - 1)], col_off, vertical))
        if layout.kind != LayoutKind.HOCHSCHILD and (p - 1, q) in targets:
            horizontal = one_minus_t(algebra, q) if p % 2 else norm_operator(algebra, q)
            placed.append((targets[(p - 1, q)], col_off, horizontal))
    return SparseMatrix.blocks(field, layout.dimension(m - 1), layout.dimension(m), placed)


@dataclass(frozen=True)
class ChainVector:
    """An element of Tot_m of a layout, one tensor per occupied column."""

    layout: BicomplexLayout
    degree: int
    components: Mapping[int, TensorElement]

    def __post_init__(self) -> None:
        rows = dict(self.layout.entries(self.degree))
        for p, x in self.components.items():
            if p not in rows:
                raise TruncationError(f"column {p} is not part of degree {self.degree} in {self.layout.describe()}")
            if x.algebra is not self.layout.algebra:
                raise AlgebraMismatchError(f"component over {x.algebra.name} in a layout over {self.layout.algebra.name}")
            if x.arity != rows[p] + 1:
                raise DimensionMismatchError(f"component at column {p} has arity {x.arity}, expected {rows[p] + 1}")

    @classmethod
    def zero(cls, layout: BicomplexLayout, degree: int) -> "ChainVector":
        return cls(layout, degree, {})

    @classmethod
    def from_rows(cls, layout: BicomplexLayout, degree: int, by_row: Mapping[int, TensorElement]) -> "ChainVector":
        return cls(layout, degree, {degree - q: x for q, x in by_row.items()})

    @classmethod
    def unflatten(cls, layout: BicomplexLayout, degree: int, vec: DenseVector) -> "ChainVector":
        if vec.length != layout.dimension(degree):
            raise DimensionMismatchError(f"vector of length {vec.length} for Tot_{degree} of {layout.describe()}")
        d = layout.algebra.dim
        sparse = vec.to_sparse()
        components: Dict[int, TensorElement] = {}
        for p, q, off in layout.blocks(degree):
            size = d ** (q + 1)
            part = {i - off: v for i, v in sparse.items() if off <= i < off + size}
            if part:
                components[p] = TensorElement(layout.algebra, q + 1, part)
        return cls(layout, degree, components)

    @property
    def algebra(self) -> Algebra:
        return self.layout.algebra

    def flatten(self) -> DenseVector:
        coords: Dict[int, Scalar] = {}
        for p, _, off in self.layout.blocks(self.degree):
            x = self.components.get(p)
            if x is not None:
                coords.update({off + i: v for i, v in x.coords.items()})
        return DenseVector.from_sparse(self.algebra.field, self.layout.dimension(self.degree), coords)

    def component(self, p: int) -> TensorElement:
        rows = dict(self.layout.entries(self.degree))
        return self.components.get(p, self.algebra.zero(rows[p] + 1))

    def by_row(self) -> Dict[int, TensorElement]:
        return {self.degree - p: x for p, x in self.components.items()}

    def items(self) -> Iterator[Tuple[int, int, TensorElement]]:
        """(column, row, component) for every entry of the degree, zeros included."""
        for p, q in self.layout.entries(self.degree):
            yield p, q, self.component(p)

    def relayout(self, layout: BicomplexLayout) -> "ChainVector":
        """The same chain placed in another window of the same complex."""
        if layout.algebra is not self.algebra or layout.kind != self.layout.kind:
            raise AlgebraMismatchError("chains can only move between windows of the same complex")
        return ChainVector(layout, self.degree, {p: x for p, x in self.components.items() if not x.is_zero()})

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.components.values())

    def _check(self, other: "ChainVector") -> None:
        if other.layout != self.layout or other.degree != self.degree:
            raise DimensionMismatchError("chains live in different total complexes")

    def __add__(self, other: "ChainVector") -> "ChainVector":
        self._check(other)
        out = dict(self.components)
        for p, x in other.components.items():
            out[p] = out[p] + x if p in out else x
        return ChainVector(self.layout, self.degree, {p: x for p, x in out.items() if not x.is_zero()})

    def __neg__(self) -> "ChainVector":
        return self.scale(-1)

    def __sub__(self, other: "ChainVector") -> "ChainVector":
        return self + (-other)

    def scale(self, c: Scalar) -> "ChainVector":
        return ChainVector(
            self.layout, self.degree, {p: y for p, x in self.components.items() if not (y := x.scale(c)).is_zero()}
        )

    def same_as(self, other: "ChainVector") -> bool:
        """Componentwise equality, ignoring the window each chain sits in."""
        if self.degree != other.degree or self.algebra is not other.algebra:
            return False
        mine = {p: x for p, x in self.components.items() if not x.is_zero()}
        theirs = {p: x for p, x in other.components.items() if not x.is_zero()}
        return mine.keys() == theirs.keys() and all(mine[p].coords == theirs[p].coords for p in mine)


def boundary(chain: ChainVector) -> ChainVector:
    d = total_differential(chain.layout, chain.degree)
    return ChainVector.unflatten(chain.layout, chain.degree - 1, d.apply(chain.flatten()))


def periodicity_shift(chain: ChainVector, layout: Optional[BicomplexLayout] = None) -> ChainVector:
    """Chain-level S: delete columns 0 and 1 and move column p to p-2."""
    if chain.layout.kind != LayoutKind.FIRST_QUADRANT:
        raise AlgebraMismatchError("the periodicity shift acts on first-quadrant chains")
    target = layout or BicomplexLayout.first_quadrant(chain.algebra, max(chain.degree - 2, 0))
    return ChainVector(target, chain.degree - 2, {p - 2: x for p, x in chain.components.items() if p >= 2})
