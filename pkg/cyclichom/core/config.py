from __future__ import annotations

from pydantic_settings import BaseSettings, SettingsConfigDict

from cyclichom.core.enums import OutputFormat


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="CYCLICHOM_", env_file=None, extra="ignore")

    # Guardrail: largest admitted tensor-power dimension d^(q+1)
    cap: int = 20_000

    # Defaults for the CLI and the verification lab
    field: str = "rationals"
    n_max: int = 4
    window: int = 3
    output_format: OutputFormat = OutputFormat.TEXT

    # Performance
    max_workers: int = 4

    # Logging
    log_level: str = "WARNING"
    log_format: str = "console"

    # Optional YAML run file
    config_path: str | None = None


settings = Settings()
