"""Exact Hochschild and cyclic homology of finite-dimensional algebras."""

__version__ = "0.1.0"

from cyclichom.core.config import settings  # noqa: E402
from cyclichom.core.logging import setup_logging  # noqa: E402

setup_logging(settings.log_level, settings.log_format)
