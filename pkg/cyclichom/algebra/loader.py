"""Resolve a CLI algebra argument: a YAML file, a bundled template or an expression."""

from __future__ import annotations

from pathlib import Path
from typing import List, Optional

import structlog

from cyclichom.algebra.constructions import LiteralSpec, _Spec, build
from cyclichom.algebra.documents import load_algebra_document
from cyclichom.algebra.expression import parse_expression
from cyclichom.algebra.structure import Algebra
from cyclichom.linalg.field import FieldSpec

logger = structlog.get_logger(__name__)

TEMPLATES_DIR = Path(__file__).parent / "templates"


def list_templates() -> List[str]:
    return sorted(p.stem for p in TEMPLATES_DIR.glob("*.yaml"))


def _looks_like_path(source: str) -> bool:
    return "/" in source or "\\" in source or source.endswith((".yaml", ".yml"))


def resolve_spec(source: str) -> _Spec:
    """Existing files win; unknown paths fall back to a bundled template of the same stem."""
    path = Path(source)
    if path.is_file():
        return LiteralSpec(document=load_algebra_document(path), source=source)
    if _looks_like_path(source):
        template = TEMPLATES_DIR / f"{path.stem}.yaml"
        if template.is_file():
            logger.debug("using bundled template", source=source, template=template.name)
            return LiteralSpec(document=load_algebra_document(template), source=source)
    return parse_expression(source)


def resolve_algebra(source: str, field: Optional[FieldSpec] = None) -> Algebra:
    return build(resolve_spec(source), field)
