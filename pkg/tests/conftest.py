from __future__ import annotations

import sys
from pathlib import Path

import pytest

# Ensure the repository root (for "import cyclichom") and this directory
# (for the dense oracle helper) are importable
ROOT = Path(__file__).resolve().parents[1]
TESTS = Path(__file__).resolve().parent
for path in (ROOT, TESTS):
    if str(path) not in sys.path:
        sys.path.insert(0, str(path))

from cyclichom.algebra.constructions import dual_numbers, ground_field  # noqa: E402
from cyclichom.linalg.field import FieldSpec  # noqa: E402


@pytest.fixture
def rationals() -> FieldSpec:
    return FieldSpec.rationals()


@pytest.fixture
def k(rationals):
    return ground_field(rationals)


@pytest.fixture
def dual(rationals):
    return dual_numbers(rationals)


@pytest.fixture
def templates_dir() -> Path:
    return ROOT / "cyclichom" / "algebra" / "templates"


@pytest.fixture(autouse=True)
def _restore_logging():
    # CLI tests reconfigure structlog while CliRunner has swapped in a temporary
    # stderr; rebind to the real stderr afterwards so later tests can log.
    yield
    from cyclichom import settings
    from cyclichom.core.logging import setup_logging

    setup_logging(settings.log_level, settings.log_format)
