"""The closed grammar of algebra constructions and its memoized builder."""

from __future__ import annotations

from functools import lru_cache
from typing import Annotated, Dict, Literal, Optional, Tuple, Union

import structlog
from pydantic import BaseModel, ConfigDict, Field

from cyclichom.algebra.documents import AlgebraDocument
from cyclichom.algebra.structure import Algebra, validate
from cyclichom.core.errors import AlgebraValidationError, ConstructionError, FieldMismatchError
from cyclichom.linalg.field import FieldSpec, Scalar

logger = structlog.get_logger(__name__)

Structure = Dict[Tuple[int, int], Dict[int, Scalar]]


class _Spec(BaseModel):
    model_config = ConfigDict(frozen=True)

    def expression(self) -> str:  # pragma: no cover - overridden
        raise NotImplementedError

    def natural_field(self) -> Optional[FieldSpec]:
        """The field a literal document fixes, if any part of the spec has one."""
        return None


class GroundFieldSpec(_Spec):
    kind: Literal["ground_field"] = "ground_field"

    def expression(self) -> str:
        return "ground_field"


class DualNumbersSpec(_Spec):
    kind: Literal["dual_numbers"] = "dual_numbers"

    def expression(self) -> str:
        return "dual_numbers"


class TruncatedPolySpec(_Spec):
    kind: Literal["truncated_poly"] = "truncated_poly"
    m: int

    def expression(self) -> str:
        return f"truncated_poly({self.m})"


class MatrixSpec(_Spec):
    kind: Literal["matrix"] = "matrix"
    inner: "ConstructionSpec"
    r: int

    def expression(self) -> str:
        return f"matrix({self.inner.expression()}, {self.r})"

    def natural_field(self) -> Optional[FieldSpec]:
        return self.inner.natural_field()


class ProductSpec(_Spec):
    kind: Literal["product"] = "product"
    left: "ConstructionSpec"
    right: "ConstructionSpec"

    def expression(self) -> str:
        return f"product({self.left.expression()}, {self.right.expression()})"

    def natural_field(self) -> Optional[FieldSpec]:
        return self.left.natural_field() or self.right.natural_field()


class UpperTriangularSpec(_Spec):
    kind: Literal["upper_triangular"] = "upper_triangular"
    inner: "ConstructionSpec"

    def expression(self) -> str:
        return f"upper_triangular({self.inner.expression()})"

    def natural_field(self) -> Optional[FieldSpec]:
        return self.inner.natural_field()


class LiteralSpec(_Spec):
    kind: Literal["literal"] = "literal"
    document: AlgebraDocument
    source: Optional[str] = None

    def expression(self) -> str:
        return f'literal("{self.source}")' if self.source else self.document.name

    def natural_field(self) -> Optional[FieldSpec]:
        return self.document.field_spec()


ConstructionSpec = Annotated[
    Union[
        GroundFieldSpec,
        DualNumbersSpec,
        TruncatedPolySpec,
        MatrixSpec,
        ProductSpec,
        UpperTriangularSpec,
        LiteralSpec,
    ],
    Field(discriminator="kind"),
]

for _model in (MatrixSpec, ProductSpec, UpperTriangularSpec):
    _model.model_rebuild()


# concrete algebras


@lru_cache(maxsize=None)
def ground_field(field: FieldSpec) -> Algebra:
    return Algebra(
        name="ground_field",
        field=field,
        dim=1,
        basis_labels=("1",),
        unit=(1,),
        structure={(0, 0): {0: 1}},
        is_ground_field=True,
    )


@lru_cache(maxsize=None)
def truncated_poly(field: FieldSpec, m: int) -> Algebra:
    """k[x]/(x^m) with basis 1, x, ..., x^(m-1)."""
    if m < 2:
        raise ConstructionError(f"truncated_poly needs m >= 2, got {m}")
    labels = ("1", "x") + tuple(f"x^{i}" for i in range(2, m))
    structure: Structure = {(i, j): {i + j: 1} for i in range(m) for j in range(m) if i + j < m}
    return Algebra(
        name=f"truncated_poly({m})",
        field=field,
        dim=m,
        basis_labels=labels,
        unit=(1,) + (0,) * (m - 1),
        structure=structure,
    )


@lru_cache(maxsize=None)
def dual_numbers(field: FieldSpec) -> Algebra:
    """k[eps]/(eps^2)."""
    return Algebra(
        name="dual_numbers",
        field=field,
        dim=2,
        basis_labels=("1", "eps"),
        unit=(1, 0),
        structure={(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}},
    )


def _inner_label(inner: Algebra, outer: str, l: int) -> str:
    if inner.is_ground_field:
        return outer
    return f"{outer}*{inner.basis_labels[l]}"


@lru_cache(maxsize=None)
def matrix_algebra(inner: Algebra, r: int) -> Algebra:
    """M_r(A) with basis E_ij ⊗ b_l at index (i*r + j)*d + l."""
    if r < 1:
        raise ConstructionError(f"matrix size must be at least 1, got {r}")
    d = inner.dim
    structure: Structure = {}
    for i in range(r):
        for j in range(r):
            for m in range(r):
                for (l1, l2), prod in inner.structure.items():
                    if prod:
                        structure[((i * r + j) * d + l1, (j * r + m) * d + l2)] = {
                            (i * r + m) * d + k: v for k, v in prod.items()
                        }
    unit = [0] * (r * r * d)
    for i in range(r):
        for l, v in enumerate(inner.unit):
            unit[(i * r + i) * d + l] = v
    labels = tuple(
        _inner_label(inner, f"E{i + 1}{j + 1}", l) for i in range(r) for j in range(r) for l in range(d)
    )
    return Algebra(
        name=f"matrix({inner.name}, {r})",
        field=inner.field,
        dim=r * r * d,
        basis_labels=labels,
        unit=tuple(unit),
        structure=structure,
        inner=inner,
        matrix_size=r,
    )


# blocks of T(A) in basis order, as (row, column) of the 2x2 matrix
_TRIANGLE = ((0, 0), (0, 1), (1, 1))


@lru_cache(maxsize=None)
def upper_triangular_algebra(inner: Algebra) -> Algebra:
    """T(A): 2x2 upper-triangular matrices over A, basis blocks e11, e12, e22."""
    d = inner.dim
    slot = {block: n for n, block in enumerate(_TRIANGLE)}
    structure: Structure = {}
    for (a, b), s in slot.items():
        for (c, e), t in slot.items():
            if b != c:
                continue
            target = slot[(a, e)]
            for (l1, l2), prod in inner.structure.items():
                if prod:
                    structure[(s * d + l1, t * d + l2)] = {target * d + k: v for k, v in prod.items()}
    unit = tuple(inner.unit) + (0,) * d + tuple(inner.unit)
    labels = tuple(
        _inner_label(inner, f"e{a + 1}{b + 1}", l) for (a, b) in _TRIANGLE for l in range(d)
    )
    return Algebra(
        name=f"upper_triangular({inner.name})",
        field=inner.field,
        dim=3 * d,
        basis_labels=labels,
        unit=unit,
        structure=structure,
    )


@lru_cache(maxsize=None)
def product_algebra(left: Algebra, right: Algebra) -> Algebra:
    """A x B with the basis of A followed by the basis of B."""
    if left.field != right.field:
        raise FieldMismatchError(f"product of algebras over {left.field} and {right.field}")
    shift = left.dim
    structure: Structure = {key: dict(v) for key, v in left.structure.items()}
    for (i, j), prod in right.structure.items():
        structure[(i + shift, j + shift)] = {k + shift: v for k, v in prod.items()}
    labels = tuple(f"({lab},0)" for lab in left.basis_labels) + tuple(
        f"(0,{lab})" for lab in right.basis_labels
    )
    return Algebra(
        name=f"product({left.name}, {right.name})",
        field=left.field,
        dim=left.dim + right.dim,
        basis_labels=labels,
        unit=tuple(left.unit) + tuple(right.unit),
        structure=structure,
    )


def _literal(spec: LiteralSpec, field: FieldSpec) -> Algebra:
    doc = spec.document
    own = doc.field_spec()
    if own != field:
        raise FieldMismatchError(f"algebra {doc.name!r} is declared over {own}, requested {field}")
    return doc.to_algebra()


@lru_cache(maxsize=256)
def _build(spec: _Spec, field: FieldSpec) -> Algebra:
    if isinstance(spec, GroundFieldSpec):
        return ground_field(field)
    if isinstance(spec, DualNumbersSpec):
        return dual_numbers(field)
    if isinstance(spec, TruncatedPolySpec):
        return truncated_poly(field, spec.m)
    if isinstance(spec, MatrixSpec):
        return matrix_algebra(_build(spec.inner, field), spec.r)
    if isinstance(spec, UpperTriangularSpec):
        return upper_triangular_algebra(_build(spec.inner, field))
    if isinstance(spec, ProductSpec):
        return product_algebra(_build(spec.left, field), _build(spec.right, field))
    if isinstance(spec, LiteralSpec):
        return _literal(spec, field)
    raise ConstructionError(f"unknown construction {spec!r}")


_validation = lru_cache(maxsize=256)(validate)


def build(spec: _Spec, field: Optional[FieldSpec] = None) -> Algebra:
    """Build and validate the algebra a spec describes.

    Without an explicit field the spec's literal documents decide it, and the
    rationals are used when nothing does.
    """
    field = field or spec.natural_field() or FieldSpec.rationals()
    algebra = _build(spec, field)
    report = _validation(algebra)
    if not report.ok:
        logger.error("algebra failed validation", algebra=algebra.name, violations=len(report.lines()))
        raise AlgebraValidationError(
            f"{algebra.name} violates the algebra axioms: " + "; ".join(report.lines()[:5]), report
        )
    logger.debug("algebra built", algebra=algebra.name, field=str(field), dim=algebra.dim)
    return algebra
