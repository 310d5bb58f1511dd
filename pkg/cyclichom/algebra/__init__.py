from cyclichom.algebra.constructions import (
    ConstructionSpec,
    DualNumbersSpec,
    GroundFieldSpec,
    LiteralSpec,
    MatrixSpec,
    ProductSpec,
    TruncatedPolySpec,
    UpperTriangularSpec,
    build,
    dual_numbers,
    ground_field,
    matrix_algebra,
    product_algebra,
    truncated_poly,
    upper_triangular_algebra,
)
from cyclichom.algebra.documents import AlgebraDocument, load_algebra_document
from cyclichom.algebra.expression import parse_expression
from cyclichom.algebra.loader import resolve_algebra, resolve_spec
from cyclichom.algebra.matrices import MatrixOverA, generalized_trace, trace_matrix
from cyclichom.algebra.structure import Algebra, TensorElement, ValidationReport, multiply, validate

__all__ = [
    "Algebra",
    "AlgebraDocument",
    "ConstructionSpec",
    "DualNumbersSpec",
    "GroundFieldSpec",
    "LiteralSpec",
    "MatrixOverA",
    "MatrixSpec",
    "ProductSpec",
    "TensorElement",
    "TruncatedPolySpec",
    "UpperTriangularSpec",
    "ValidationReport",
    "build",
    "dual_numbers",
    "generalized_trace",
    "ground_field",
    "load_algebra_document",
    "matrix_algebra",
    "multiply",
    "parse_expression",
    "product_algebra",
    "resolve_algebra",
    "resolve_spec",
    "trace_matrix",
    "truncated_poly",
    "upper_triangular_algebra",
    "validate",
]
