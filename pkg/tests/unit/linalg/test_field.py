from __future__ import annotations

from fractions import Fraction

import pytest

from cyclichom.core.errors import InputFormatError
from cyclichom.linalg.field import FieldSpec, is_prime


class TestFieldSpec:
    def test_parse_aliases(self):
        assert FieldSpec.parse("rationals") == FieldSpec.rationals()
        assert FieldSpec.parse("rat") == FieldSpec.rationals()
        assert FieldSpec.parse("fp:7") == FieldSpec.prime(7)
        assert str(FieldSpec.parse("FP:3")) == "fp:3"

    @pytest.mark.parametrize("text", ["fp:4", "fp:x", "reals", "fp:1"])
    def test_parse_rejects(self, text):
        with pytest.raises(InputFormatError):
            FieldSpec.parse(text)

    def test_prime_field_needs_prime(self):
        with pytest.raises(ValueError):
            FieldSpec.prime(9)

    def test_rational_normalization_demotes_integral_fractions(self):
        q = FieldSpec.rationals()
        assert q.normalize(Fraction(4, 2)) == 2
        assert isinstance(q.normalize(Fraction(4, 2)), int)
        assert q.format(Fraction(-3, 6)) == "-1/2"

    def test_prime_field_arithmetic(self):
        f5 = FieldSpec.prime(5)
        assert f5.normalize(-1) == 4
        assert f5.coerce("1/2") == 3
        assert f5.inv(2) == 3
        assert f5.div(1, 3) == 2
        assert f5.format(7) == "2"

    def test_coerce_rejects_non_exact_values(self):
        q = FieldSpec.rationals()
        with pytest.raises(InputFormatError):
            q.coerce(0.5)  # type: ignore[arg-type]
        with pytest.raises(InputFormatError):
            q.coerce(True)
        with pytest.raises(InputFormatError):
            FieldSpec.prime(3).coerce("1/3")

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            FieldSpec.rationals().inv(0)


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
