from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import structlog
import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from cyclichom.core.config import Settings, settings as default_settings
from cyclichom.core.enums import OutputFormat
from cyclichom.core.errors import InputFormatError
from cyclichom.linalg.field import FieldSpec

logger = structlog.get_logger(__name__)

RUN_KEYS = ("field", "cap", "n_max", "window", "output_format", "max_workers")


def load_run_config(path: str | Path | None = None, base: Settings | None = None) -> Dict[str, Any]:
    """Defaults from settings, shallow-merged with an optional YAML run file."""
    base = base or default_settings
    default: Dict[str, Any] = {key: getattr(base, key) for key in RUN_KEYS}
    if path is None:
        path = base.config_path
    if path is None:
        return default
    p = Path(path)
    if not p.exists():
        logger.warning("run config not found, using defaults", path=str(p))
        return default
    try:
        data = yaml.safe_load(p.read_text()) or {}
    except yaml.YAMLError as exc:
        raise InputFormatError(f"cannot parse run config: {exc}", [str(p)]) from exc
    if not isinstance(data, dict):
        raise InputFormatError("run config must be a mapping", [str(p)])
    unknown = sorted(set(data) - set(RUN_KEYS))
    if unknown:
        logger.warning("ignoring unknown run config keys", keys=unknown)
    return {**default, **{k: v for k, v in data.items() if k in RUN_KEYS}}


class RunConfig(BaseModel):
    """Effective parameters of one CLI run: settings, then the YAML run file, then flags."""

    model_config = ConfigDict(frozen=True)

    field: FieldSpec = Field(default_factory=FieldSpec.rationals)
    cap: int = Field(default=20_000, ge=1)
    n_max: int = Field(default=4, ge=0)
    window: int = Field(default=3, ge=0)
    output_format: OutputFormat = OutputFormat.TEXT
    max_workers: int = Field(default=4, ge=1)
    force: bool = False
    strict: bool = False
    degree: Optional[int] = Field(default=None, ge=0)

    @field_validator("field", mode="before")
    @classmethod
    def _parse_field(cls, value: Any) -> Any:
        return FieldSpec.parse(value) if isinstance(value, str) else value


def resolve_run_config(
    path: str | Path | None = None, overrides: Optional[Mapping[str, Any]] = None, base: Settings | None = None
) -> RunConfig:
    """Merge settings, the run file and explicit overrides (None values are ignored)."""
    merged = load_run_config(path, base)
    merged.update({k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        return RunConfig.model_validate(merged)
    except ValidationError as exc:
        locations = [".".join(str(part) for part in err["loc"]) for err in exc.errors()]
        raise InputFormatError(f"invalid run configuration: {exc.errors()[0]['msg']}", locations) from exc
