"""The bundled algebras and idempotents the verification suites run on."""

from __future__ import annotations

from typing import List, Optional, Tuple

from cyclichom.algebra.constructions import ground_field
from cyclichom.algebra.loader import resolve_algebra
from cyclichom.algebra.matrices import MatrixOverA
from cyclichom.algebra.structure import Algebra
from cyclichom.chern.idempotents import Idempotent
from cyclichom.linalg.field import FieldSpec

CORPUS_EXPRESSIONS = (
    "ground_field",
    "dual_numbers",
    "truncated_poly(3)",
    "matrix(ground_field, 2)",
    "upper_triangular(ground_field)",
    "upper_triangular(dual_numbers)",
    "product(ground_field, ground_field)",
)


def corpus(field: Optional[FieldSpec] = None, expressions: Tuple[str, ...] = CORPUS_EXPRESSIONS) -> List[Algebra]:
    field = field or FieldSpec.rationals()
    return [resolve_algebra(text, field) for text in expressions]


def shear(algebra: Algebra, r: int = 2, i: int = 0, j: int = 1) -> MatrixOverA:
    """1 + E_ij, invertible for i != j."""
    return MatrixOverA.identity(algebra, r) + MatrixOverA.elementary(algebra, r, i, j)


def standard_idempotents(field: Optional[FieldSpec] = None) -> List[Tuple[str, Idempotent]]:
    """unit of M_1(k), E11 in M_2(k), two conjugates of E11 and the zero matrix."""
    k = ground_field(field or FieldSpec.rationals())
    e11 = Idempotent.diagonal(k, 2, 0)
    return [
        ("unit", Idempotent.unit(k, 1)),
        ("E11:2", e11),
        ("E11:2^(1+E12)", e11.conjugate(shear(k, 2, 0, 1))),
        ("E11:2^(1+E21)", e11.conjugate(shear(k, 2, 1, 0))),
        ("zero", Idempotent.zero(k, 1)),
    ]
