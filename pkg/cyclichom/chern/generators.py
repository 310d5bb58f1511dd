"""The canonical cycles u^n and u^inf over k and their normalizations psi."""

from __future__ import annotations

from math import factorial
from typing import Callable, Optional

from cyclichom.algebra.constructions import ground_field
from cyclichom.algebra.structure import Algebra, TensorElement
from cyclichom.core.enums import GroupKind
from cyclichom.core.errors import DimensionMismatchError, GeneratorError
from cyclichom.cyclic.bicomplex import BicomplexLayout, ChainVector
from cyclichom.cyclic.homology import HomologyClass, HomologyResult
from cyclichom.linalg.field import FieldSpec, Scalar


def y_coefficient(i: int) -> int:
    """(-1)^i (2i)!/i!, the coefficient in row 2i."""
    return (-1) ** i * factorial(2 * i) // factorial(i)


def z_coefficient(i: int) -> int:
    """(-1)^(i-1) (2i)!/(2 i!), the coefficient in row 2i-1 (i >= 1)."""
    if i < 1:
        raise DimensionMismatchError("z coefficients start at i = 1")
    return (-1) ** (i - 1) * factorial(2 * i) // (2 * factorial(i))


def slotted_chain(
    layout: BicomplexLayout, degree: int, top: int, power: Callable[[int], TensorElement]
) -> ChainVector:
    """y_i * power(2i+1) in row 2i and z_i * power(2i) in row 2i-1, for i <= top."""
    rows = {}
    for i in range(top + 1):
        rows[2 * i] = power(2 * i + 1).scale(y_coefficient(i))
        if i:
            rows[2 * i - 1] = power(2 * i).scale(z_coefficient(i))
    return ChainVector.from_rows(layout, degree, {q: x for q, x in rows.items() if not x.is_zero()})


def _unit_power(k: Algebra) -> Callable[[int], TensorElement]:
    return lambda m: TensorElement(k, m, {0: 1})


def u_generator(n: int, field: Optional[FieldSpec] = None) -> ChainVector:
    """u^n in Tot CC(k)_2n: y_i at (2(n-i), 2i) and z_i at (2(n-i)+1, 2i-1)."""
    if n < 0:
        raise DimensionMismatchError(f"n must be >= 0, got {n}")
    k = ground_field(field or FieldSpec.rationals())
    return slotted_chain(BicomplexLayout.first_quadrant(k, 2 * n), 2 * n, n, _unit_power(k))


def u_generator_minus(window: int, field: Optional[FieldSpec] = None) -> ChainVector:
    """u^inf cut at row 2M, in the negative window of degree 0."""
    if window < 0:
        raise DimensionMismatchError(f"window must be >= 0, got {window}")
    k = ground_field(field or FieldSpec.rationals())
    return slotted_chain(BicomplexLayout.negative(k, window), 0, window, _unit_power(k))


def _normalize(cls: HomologyClass, canonical: HomologyClass) -> Scalar:
    group = cls.group
    if group.dim != 1:
        raise GeneratorError(f"{group.name} has dimension {group.dim}, expected 1")
    base = canonical.coords[0]
    if base == 0:
        raise GeneratorError(f"the canonical generator is zero in {group.name} over {group.field}")
    return group.field.div(cls.coords[0], base)


def _ground_group(group: HomologyResult, kind: GroupKind) -> None:
    if not group.algebra.is_ground_field:
        raise GeneratorError(f"{group.name} is not a group of the ground field")
    if group.group != kind:
        raise GeneratorError(f"{group.name} is not {kind.value}")


def psi(n: int, cls: HomologyClass) -> Scalar:
    """Coordinate of a class of HC_2n(k) against [u^n]."""
    group = cls.group
    _ground_group(group, GroupKind.HC)
    if group.degree != 2 * n:
        raise GeneratorError(f"{group.name} is not HC_{2 * n}")
    return _normalize(cls, group.class_of(u_generator(n, group.field)))


def psi_minus(cls: HomologyClass) -> Scalar:
    """Coordinate of a class of windowed HC_0^-(k) against the cut u^inf."""
    group = cls.group
    _ground_group(group, GroupKind.HC_MINUS)
    window = group.layout.window
    assert window is not None
    return _normalize(cls, group.class_of(u_generator_minus(window, group.field)))
