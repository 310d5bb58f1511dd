"""Idempotent matrices over an algebra and formal differences of them."""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Tuple, Union

import structlog
import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from cyclichom.algebra.loader import resolve_algebra
from cyclichom.algebra.matrices import MatrixOverA
from cyclichom.algebra.structure import Algebra
from cyclichom.core.errors import (
    AlgebraMismatchError,
    DimensionMismatchError,
    IdempotentError,
    InputFormatError,
)

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class Idempotent:
    """e in M_r(A) with e*e = e; only ``verify`` sets ``verified``."""

    matrix: MatrixOverA
    verified: bool = False

    @classmethod
    def verify(cls, matrix: MatrixOverA) -> "Idempotent":
        if not matrix.is_idempotent():
            raise IdempotentError(f"{matrix.size}x{matrix.size} matrix over {matrix.algebra.name} is not idempotent")
        return cls(matrix, verified=True)

    @classmethod
    def unit(cls, algebra: Algebra, r: int = 1) -> "Idempotent":
        return cls.verify(MatrixOverA.identity(algebra, r))

    @classmethod
    def zero(cls, algebra: Algebra, r: int = 1) -> "Idempotent":
        return cls.verify(MatrixOverA.zero(algebra, r))

    @classmethod
    def diagonal(cls, algebra: Algebra, r: int, *positions: int) -> "Idempotent":
        """Sum of diagonal matrix units E_ii at zero-based ``positions``."""
        return cls.verify(MatrixOverA.elementary_sum(algebra, r, [(i, i) for i in positions]))

    @property
    def inner_algebra(self) -> Algebra:
        return self.matrix.algebra

    @property
    def size(self) -> int:
        return self.matrix.size

    def conjugate(self, g: MatrixOverA) -> "Idempotent":
        return Idempotent.verify(g.conjugate(self.matrix))


@dataclass(frozen=True)
class K0Witness:
    """sum(plus) - sum(minus) as a stand-in for a class in K_0(A)."""

    plus: Tuple[Idempotent, ...] = ()
    minus: Tuple[Idempotent, ...] = ()

    def __post_init__(self) -> None:
        parts = self.plus + self.minus
        if any(not e.verified for e in parts):
            raise IdempotentError("witness components must be verified idempotents")
        algebras = {id(e.inner_algebra) for e in parts}
        if len(algebras) > 1:
            raise AlgebraMismatchError("witness components live over different algebras")

    @property
    def inner_algebra(self) -> Optional[Algebra]:
        parts = self.plus + self.minus
        return parts[0].inner_algebra if parts else None


class IdempotentDocument(BaseModel):
    """YAML form: the inner algebra, the size and r x r coordinate lists."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    algebra: Optional[str] = None
    size: int = Field(ge=1)
    entries: Tuple[Tuple[Tuple[Union[int, str], ...], ...], ...]


_SHORT = re.compile(r"^(?:(?P<unit>unit)|(?P<zero>zero)|E(?P<i>\d)(?P<j>\d))(?::(?P<r>\d+))?$")


def parse_short_form(text: str, algebra: Algebra) -> Optional[Idempotent]:
    """``unit``, ``unit:<r>``, ``zero:<r>`` or ``E<i><i>:<r>`` (one-based); None if not a short form."""
    match = _SHORT.match(text.strip())
    if match is None:
        return None
    r = int(match.group("r") or 1)
    if match.group("unit"):
        return Idempotent.unit(algebra, r)
    if match.group("zero"):
        return Idempotent.zero(algebra, r)
    i, j = int(match.group("i")), int(match.group("j"))
    if i != j:
        raise IdempotentError(f"E{i}{j} is not idempotent")
    if not 1 <= i <= r:
        raise InputFormatError(f"E{i}{i} does not fit a {r}x{r} matrix", [text])
    return Idempotent.diagonal(algebra, r, i - 1)


def _from_document(doc: IdempotentDocument, algebra: Optional[Algebra], source: str) -> Idempotent:
    if algebra is None:
        if doc.algebra is None:
            raise InputFormatError("idempotent document names no algebra", [source])
        algebra = resolve_algebra(doc.algebra)
    elif doc.algebra is not None and resolve_algebra(doc.algebra, algebra.field) is not algebra:
        raise InputFormatError(f"idempotent is declared over {doc.algebra}, not {algebra.name}", [source])
    if len(doc.entries) != doc.size or any(len(row) != doc.size for row in doc.entries):
        raise InputFormatError(f"entries are not {doc.size}x{doc.size}", [source])
    try:
        matrix = MatrixOverA.from_coords(algebra, doc.entries)
    except DimensionMismatchError as exc:
        raise InputFormatError(str(exc), [source]) from exc
    return Idempotent.verify(matrix)


def load_idempotent(source: Union[str, Path], algebra: Optional[Algebra] = None) -> Idempotent:
    """A short form over ``algebra`` or a YAML idempotent document; always verified."""
    text = str(source)
    if algebra is not None:
        short = parse_short_form(text, algebra)
        if short is not None:
            return short
    path = Path(source)
    try:
        data = yaml.safe_load(path.read_text())
    except FileNotFoundError as exc:
        logger.error("idempotent file not found", path=text)
        raise InputFormatError("idempotent file not found", [text]) from exc
    except yaml.YAMLError as exc:
        logger.error("idempotent file is not valid YAML", path=text)
        raise InputFormatError(f"cannot parse idempotent file: {exc}", [text]) from exc
    try:
        doc = IdempotentDocument.model_validate(data)
    except ValidationError as exc:
        locations = [f"{text}:" + ".".join(str(part) for part in err["loc"]) for err in exc.errors()]
        raise InputFormatError("invalid idempotent document", locations) from exc
    return _from_document(doc, algebra, text)


def witness(plus: Sequence[Idempotent] = (), minus: Sequence[Idempotent] = ()) -> K0Witness:
    return K0Witness(tuple(plus), tuple(minus))
