"""Algebra-description documents: YAML files of structure constants."""

from __future__ import annotations

from pathlib import Path
from typing import Dict, Tuple, Union

import structlog
import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from cyclichom.algebra.structure import Algebra
from cyclichom.core.errors import InputFormatError
from cyclichom.linalg.field import FieldSpec, Scalar

logger = structlog.get_logger(__name__)

RawScalar = Union[int, str]


class ProductRecord(BaseModel):
    """b_i * b_j = sum of coords[k] * b_k."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    i: int = Field(ge=0)
    j: int = Field(ge=0)
    coords: Tuple[RawScalar, ...]


class AlgebraDocument(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str
    field: str = "rationals"
    dim: int = Field(ge=1)
    basis: Tuple[str, ...]
    unit: Tuple[RawScalar, ...]
    products: Tuple[ProductRecord, ...] = ()

    @model_validator(mode="after")
    def _check_shape(self) -> "AlgebraDocument":
        if len(self.basis) != self.dim:
            raise ValueError(f"basis lists {len(self.basis)} labels for dim {self.dim}")
        if len(self.unit) != self.dim:
            raise ValueError(f"unit has {len(self.unit)} coordinates for dim {self.dim}")
        seen = set()
        for rec in self.products:
            if rec.i >= self.dim or rec.j >= self.dim:
                raise ValueError(f"product ({rec.i}, {rec.j}) outside the basis")
            if len(rec.coords) != self.dim:
                raise ValueError(f"product ({rec.i}, {rec.j}) has {len(rec.coords)} coordinates")
            if (rec.i, rec.j) in seen:
                raise ValueError(f"product ({rec.i}, {rec.j}) listed twice")
            seen.add((rec.i, rec.j))
        return self

    def field_spec(self) -> FieldSpec:
        return FieldSpec.parse(self.field)

    def to_algebra(self) -> Algebra:
        field = self.field_spec()
        structure: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
        for rec in self.products:
            coords = {k: field.coerce(v) for k, v in enumerate(rec.coords)}
            structure[(rec.i, rec.j)] = {k: v for k, v in coords.items() if v != 0}
        return Algebra(
            name=self.name,
            field=field,
            dim=self.dim,
            basis_labels=self.basis,
            unit=tuple(field.coerce(v) for v in self.unit),
            structure=structure,
        )

    @classmethod
    def from_algebra(cls, algebra: Algebra) -> "AlgebraDocument":
        field = algebra.field
        products = [
            ProductRecord(
                i=i,
                j=j,
                coords=tuple(field.format(prod.get(k, 0)) for k in range(algebra.dim)),
            )
            for (i, j), prod in sorted(algebra.structure.items())
            if prod
        ]
        return cls(
            name=algebra.name,
            field=str(field),
            dim=algebra.dim,
            basis=algebra.basis_labels,
            unit=tuple(field.format(v) for v in algebra.unit),
            products=tuple(products),
        )


def _locations(exc: ValidationError, source: str) -> list[str]:
    return [f"{source}:" + ".".join(str(part) for part in err["loc"]) for err in exc.errors()]


def parse_algebra_document(data: object, source: str = "<document>") -> AlgebraDocument:
    if not isinstance(data, dict):
        raise InputFormatError("algebra document must be a mapping", [source])
    try:
        return AlgebraDocument.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]["msg"] if exc.errors() else "invalid document"
        raise InputFormatError(f"invalid algebra document: {first}", _locations(exc, source)) from exc


def load_algebra_document(path: Union[str, Path]) -> AlgebraDocument:
    p = Path(path)
    try:
        data = yaml.safe_load(p.read_text())
    except FileNotFoundError as exc:
        logger.error("algebra file not found", path=str(p))
        raise InputFormatError("algebra file not found", [str(p)]) from exc
    except yaml.YAMLError as exc:
        logger.error("algebra file is not valid YAML", path=str(p))
        raise InputFormatError(f"cannot parse algebra file: {exc}", [str(p)]) from exc
    return parse_algebra_document(data, str(p))


def dump_algebra_document(doc: AlgebraDocument) -> str:
    return yaml.safe_dump(doc.model_dump(mode="json"), sort_keys=False)
