"""Core enumerations for the package."""

from enum import Enum


class FieldKind(str, Enum):
    """Exact scalar domains."""
    RATIONALS = "rationals"
    PRIME = "prime"


class LayoutKind(str, Enum):
    """Shapes of bicomplex windows."""
    FIRST_QUADRANT = "first_quadrant"  # Tot CC(A)
    HOCHSCHILD = "hochschild"  # column 0 only, b differential
    NEGATIVE = "negative"  # columns -2M..0 of CC^-(A), quotient window


class GroupKind(str, Enum):
    """Homology groups computed by the cyclic module."""
    HC = "HC"
    HH = "HH"
    HC_MINUS = "HC-"
    HC_PER = "HCper"


class Verdict(str, Enum):
    """Result of a verification check."""
    PASS = "pass"
    FAIL = "fail"
    APPROXIMATE = "approximate"
    SKIPPED = "skipped"  # refused by the size guardrail, nothing verified


class OutputFormat(str, Enum):
    """Report rendering formats."""
    TEXT = "text"
    STRUCTURED = "structured"


class InvariantKind(str, Enum):
    """Invariants the additivity check knows how to compare."""
    HH = "HH"
    HC = "HC"
    HC_MINUS = "HC-"
    TOWER_LIMIT = "tower-limit"


class Suite(str, Enum):
    """Named groups of verification checks."""
    ALL = "all"
    OPERATORS = "operators"
    GENERATORS = "generators"
    ADDITIVITY = "additivity"
    MORITA = "morita"
    CHERN_COMPAT = "theoremB"
