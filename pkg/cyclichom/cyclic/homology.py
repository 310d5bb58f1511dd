"""HC_n, HH_n, the periodicity map S and the windowed HC_0^- / HC_0^per."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

import structlog

from cyclichom.algebra.structure import Algebra
from cyclichom.core.enums import GroupKind, LayoutKind
from cyclichom.core.errors import (
    AlgebraMismatchError,
    DimensionMismatchError,
    GuardrailExceededError,
)
from cyclichom.cyclic.bicomplex import (
    BicomplexLayout,
    ChainVector,
    check_guardrail,
    periodicity_shift,
    total_differential,
)
from cyclichom.linalg.elimination import Subquotient, rank, subquotient
from cyclichom.linalg.field import FieldSpec, Scalar
from cyclichom.linalg.matrices import SparseMatrix

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class HomologyResult:
    """One homology group with representative cycles in a fixed window.

    ``window`` and ``stabilized`` are set for HC_0^-: stabilized is None when
    the guardrail refused the larger comparison window.
    """

    group: GroupKind
    degree: int
    layout: BicomplexLayout
    representatives: Tuple[ChainVector, ...]
    quotient: Subquotient
    window: Optional[int] = None
    stabilized: Optional[bool] = None

    @property
    def algebra(self) -> Algebra:
        return self.layout.algebra

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.quotient.dim

    @property
    def name(self) -> str:
        return f"{self.group.value}_{self.degree}({self.algebra.name})"

    def coords(self, chain: ChainVector) -> Tuple[Scalar, ...]:
        """Class coordinates of a cycle; NotACycleError for anything else."""
        if chain.algebra is not self.algebra:
            raise AlgebraMismatchError(f"chain over {chain.algebra.name} in {self.name}")
        if chain.degree != self.degree:
            raise DimensionMismatchError(f"chain of degree {chain.degree} in {self.name}")
        if chain.layout != self.layout:
            chain = chain.relayout(self.layout)
        return self.quotient.coords(chain.flatten())

    def class_of(self, chain: ChainVector) -> "HomologyClass":
        return HomologyClass(self, self.coords(chain))

    def basis_class(self, i: int) -> "HomologyClass":
        return HomologyClass(self, tuple(1 if j == i else 0 for j in range(self.dim)))


@dataclass(frozen=True)
class HomologyClass:
    """Coordinates of a class in the representative basis of ``group``."""

    group: HomologyResult
    coords: Tuple[Scalar, ...]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        if other.group is not self.group:
            raise AlgebraMismatchError("classes of different groups")
        norm = self.group.field.normalize
        return HomologyClass(self.group, tuple(norm(a + b) for a, b in zip(self.coords, other.coords)))

    def scale(self, c: Scalar) -> "HomologyClass":
        norm = self.group.field.normalize
        return HomologyClass(self.group, tuple(norm(c * a) for a in self.coords))

    def format(self) -> List[str]:
        return [self.group.field.format(c) for c in self.coords]


def _homology(group: GroupKind, layout: BicomplexLayout, degree: int, **extra) -> HomologyResult:
    d_in = total_differential(layout, degree + 1)
    d_out = total_differential(layout, degree)
    quotient = subquotient(d_in, d_out)
    reps = tuple(ChainVector.unflatten(layout, degree, r) for r in quotient.representatives)
    logger.debug("homology", algebra=layout.algebra.name, group=group.value, degree=degree, dim=quotient.dim)
    return HomologyResult(group, degree, layout, reps, quotient, **extra)


_LAYOUT_GROUPS = {
    LayoutKind.FIRST_QUADRANT: GroupKind.HC,
    LayoutKind.HOCHSCHILD: GroupKind.HH,
    LayoutKind.NEGATIVE: GroupKind.HC_MINUS,
}


def homology_in(
    layout: BicomplexLayout, degree: int, *, cap: Optional[int] = None, force: bool = False
) -> HomologyResult:
    """Homology at ``degree`` inside an explicit layout.

    Any layout holding the blocks of degrees degree-1..degree+1 gives the same
    dimension as the default one; a layout missing a block raises
    TruncationError.
    """
    if degree < 0:
        raise DimensionMismatchError(f"degree must be >= 0, got {degree}")
    check_guardrail(layout, cap, force)
    return _homology(_LAYOUT_GROUPS[layout.kind], layout, degree)


@lru_cache(maxsize=256)
def _hc(algebra: Algebra, n: int) -> HomologyResult:
    return _homology(GroupKind.HC, BicomplexLayout.first_quadrant(algebra, n), n)


@lru_cache(maxsize=256)
def _hh(algebra: Algebra, n: int) -> HomologyResult:
    return _homology(GroupKind.HH, BicomplexLayout.hochschild(algebra, n), n)


def hc(algebra: Algebra, n: int, *, cap: Optional[int] = None, force: bool = False) -> HomologyResult:
    """HC_n(A) from Tot CC(A) with columns and rows 0..n+1."""
    if n < 0:
        raise DimensionMismatchError(f"degree must be >= 0, got {n}")
    check_guardrail(BicomplexLayout.first_quadrant(algebra, n), cap, force)
    return _hc(algebra, n)


def hh(algebra: Algebra, n: int, *, cap: Optional[int] = None, force: bool = False) -> HomologyResult:
    """HH_n(A) from the column (A^⊗(*+1), b)."""
    if n < 0:
        raise DimensionMismatchError(f"degree must be >= 0, got {n}")
    check_guardrail(BicomplexLayout.hochschild(algebra, n), cap, force)
    return _hh(algebra, n)


def s_map(
    algebra: Algebra,
    n: int,
    hc_2n: Optional[HomologyResult] = None,
    hc_2n_minus_2: Optional[HomologyResult] = None,
    *,
    cap: Optional[int] = None,
    force: bool = False,
) -> SparseMatrix:
    """Matrix of S: HC_2n -> HC_{2n-2} in the representative bases."""
    if n < 1:
        raise DimensionMismatchError(f"S needs n >= 1, got {n}")
    source = hc_2n or hc(algebra, 2 * n, cap=cap, force=force)
    target = hc_2n_minus_2 or hc(algebra, 2 * n - 2, cap=cap, force=force)
    for group, degree in ((source, 2 * n), (target, 2 * n - 2)):
        if group.algebra is not algebra or group.degree != degree or group.group != GroupKind.HC:
            raise DimensionMismatchError(f"{group.name} is not HC_{degree}({algebra.name})")
    columns = {}
    for j, rep in enumerate(source.representatives):
        coords = target.coords(periodicity_shift(rep, target.layout))
        columns[j] = dict(enumerate(coords))
    return SparseMatrix.from_columns(algebra.field, target.dim, source.dim, columns)


@lru_cache(maxsize=128)
def _hc_minus0(algebra: Algebra, window: int) -> HomologyResult:
    return _homology(GroupKind.HC_MINUS, BicomplexLayout.negative(algebra, window), 0, window=window)


def hc_minus0(algebra: Algebra, window: int, *, cap: Optional[int] = None, force: bool = False) -> HomologyResult:
    """HC_0^- through the window of columns -2M..0; compares with M+1 for stability."""
    check_guardrail(BicomplexLayout.negative(algebra, window), cap, force)
    result = _hc_minus0(algebra, window)
    stabilized: Optional[bool]
    try:
        check_guardrail(BicomplexLayout.negative(algebra, window + 1), cap, force)
    except GuardrailExceededError:
        stabilized = None
    else:
        stabilized = _hc_minus0(algebra, window + 1).dim == result.dim
    if stabilized is False:
        logger.warning("HC_0^- window not stabilized", algebra=algebra.name, window=window)
    return HomologyResult(
        result.group, 0, result.layout, result.representatives, result.quotient, window, stabilized
    )


@dataclass(frozen=True)
class TowerLimit:
    """lim HC_2j along S, cut at HC_{2 n_max}."""

    algebra: Algebra
    n_max: int
    groups: Tuple[HomologyResult, ...]
    s_maps: Tuple[SparseMatrix, ...]
    dim: int
    stabilized: bool

    @property
    def approximate(self) -> bool:
        return not self.stabilized

    @property
    def composite(self) -> SparseMatrix:
        return tower_composite(self.algebra.field, self.groups[-1].dim, self.s_maps)


def tower_composite(field: FieldSpec, top_dim: int, s_maps: Tuple[SparseMatrix, ...]) -> SparseMatrix:
    """S_1 o ... o S_n: HC_2n -> HC_0."""
    out = SparseMatrix.identity(field, top_dim)
    for s in reversed(s_maps):
        out = s @ out
    return out


def _is_iso(m: SparseMatrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def hc_per0(algebra: Algebra, n_max: int, *, cap: Optional[int] = None, force: bool = False) -> TowerLimit:
    """HC_0^per as the eventual image of the S-tower at HC_0."""
    if n_max < 0:
        raise DimensionMismatchError(f"n_max must be >= 0, got {n_max}")
    groups = tuple(hc(algebra, 2 * j, cap=cap, force=force) for j in range(n_max + 1))
    s_maps = tuple(s_map(algebra, j, groups[j], groups[j - 1]) for j in range(1, n_max + 1))
    stabilized = all(_is_iso(s_maps[j - 1]) for j in range(n_max // 2 + 1, n_max + 1))
    dim = rank(tower_composite(algebra.field, groups[-1].dim, s_maps))
    limit = TowerLimit(algebra, n_max, groups, s_maps, dim, stabilized)
    if not stabilized:
        logger.warning("S-tower not stabilized", algebra=algebra.name, n_max=n_max)
    return limit
