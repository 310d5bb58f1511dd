"""Exact scalar fields: the rationals and prime fields F_p."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, model_validator

from cyclichom.core.enums import FieldKind
from cyclichom.core.errors import InputFormatError

Scalar = Union[int, Fraction]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class FieldSpec(BaseModel):
    """The base field k.

    Scalars over the rationals are ``int`` or ``Fraction`` (integral fractions are
    demoted to ``int``); scalars over F_p are ``int`` in ``range(p)``.
    """

    model_config = ConfigDict(frozen=True)

    kind: FieldKind = FieldKind.RATIONALS
    p: Optional[int] = None

    @model_validator(mode="after")
    def _check_characteristic(self) -> "FieldSpec":
        if self.kind == FieldKind.PRIME:
            if self.p is None or not is_prime(self.p):
                raise ValueError(f"prime field needs a prime p, got {self.p}")
        elif self.p is not None:
            raise ValueError("the rationals take no characteristic parameter")
        return self

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(kind=FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(kind=FieldKind.PRIME, p=p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``rationals``/``rat``/``Q`` or ``fp:<p>``."""
        value = text.strip().lower()
        if value in ("rationals", "rat", "q"):
            return cls.rationals()
        if value.startswith("fp:"):
            try:
                p = int(value[3:])
            except ValueError as exc:
                raise InputFormatError(f"bad field characteristic in {text!r}") from exc
            if not is_prime(p):
                raise InputFormatError(f"fp:{p} is not a prime field")
            return cls.prime(p)
        raise InputFormatError(f"unknown field {text!r}; expected 'rationals' or 'fp:<p>'")

    @property
    def is_rationals(self) -> bool:
        return self.kind == FieldKind.RATIONALS

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __str__(self) -> str:
        return "rationals" if self.is_rationals else f"fp:{self.p}"

    # scalar arithmetic

    def normalize(self, x: Scalar) -> Scalar:
        if self.p is not None:
            if isinstance(x, Fraction):
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return x % self.p
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        return x

    def coerce(self, value: Union[int, Fraction, str]) -> Scalar:
        """Map an integer, fraction or ``"p/q"`` string into the field."""
        if isinstance(value, bool):
            raise InputFormatError(f"not a scalar: {value!r}")
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise InputFormatError(f"not an exact scalar: {value!r}") from exc
        if not isinstance(value, (int, Fraction)):
            raise InputFormatError(f"not an exact scalar: {value!r}")
        if self.p is not None and isinstance(value, Fraction) and value.denominator % self.p == 0:
            raise InputFormatError(f"{value} has no image in {self}")
        return self.normalize(value)

    def inv(self, x: Scalar) -> Scalar:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is not None:
            return pow(int(x), -1, self.p)
        return self.normalize(1 / Fraction(x))

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.normalize(a * self.inv(b))

    def format(self, x: Scalar) -> str:
        x = self.normalize(x)
        if isinstance(x, Fraction):
            return f"{x.numerator}/{x.denominator}"
        return str(x)
