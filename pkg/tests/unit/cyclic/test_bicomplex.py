from __future__ import annotations

import pytest

from cyclichom.algebra import build, parse_expression
from cyclichom.core.enums import LayoutKind
from cyclichom.core.errors import GuardrailExceededError, TruncationError
from cyclichom.cyclic import (
    BicomplexLayout,
    ChainVector,
    boundary,
    check_guardrail,
    periodicity_shift,
    total_differential,
)
from cyclichom.linalg import rank


class TestLayouts:
    def test_first_quadrant_entries(self, k):
        layout = BicomplexLayout.first_quadrant(k, 2)
        assert layout.entries(2) == [(0, 2), (1, 1), (2, 0)]
        assert layout.entries(3) == [(0, 3), (1, 2), (2, 1), (3, 0)]
        with pytest.raises(TruncationError):
            layout.entries(4)

    def test_negative_window_entries(self, k):
        layout = BicomplexLayout.negative(k, 1)
        assert layout.window == 1
        assert layout.entries(0) == [(-2, 2), (-1, 1), (0, 0)]
        assert layout.entries(-1) == [(-2, 1), (-1, 0)]
        assert layout.entries(1) == [(-2, 3), (-1, 2), (0, 1)]

    def test_hochschild_column(self, dual):
        layout = BicomplexLayout.hochschild(dual, 2)
        assert layout.kind == LayoutKind.HOCHSCHILD
        assert layout.entries(3) == [(0, 3)]
        assert layout.dimension(3) == 16

    def test_describe(self, k):
        assert BicomplexLayout.negative(k, 2).describe() == "negative columns -4..0 rows 0..5"

    def test_guardrail(self):
        t = build(parse_expression("upper_triangular(dual_numbers)"))
        layout = BicomplexLayout.first_quadrant(t, 5)
        with pytest.raises(GuardrailExceededError) as info:
            check_guardrail(layout, cap=20_000)
        assert info.value.required == 6**7
        assert info.value.cap == 20_000
        check_guardrail(layout, cap=20_000, force=True)
        check_guardrail(BicomplexLayout.first_quadrant(t, 3), cap=20_000)


class TestDifferential:
    @pytest.mark.parametrize(
        "expression", ["ground_field", "dual_numbers", "upper_triangular(k)", "product(k, k)", "truncated_poly(3)"]
    )
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_square_is_zero(self, expression, m):
        a = build(parse_expression(expression))
        layout = BicomplexLayout.first_quadrant(a, m)
        assert (total_differential(layout, m) @ total_differential(layout, m + 1)).is_zero()

    @pytest.mark.parametrize("window", [0, 1, 2])
    def test_negative_window_is_a_complex(self, dual, window):
        layout = BicomplexLayout.negative(dual, window)
        assert (total_differential(layout, 0) @ total_differential(layout, 1)).is_zero()

    @pytest.mark.parametrize("m", range(0, 9))
    def test_parity_over_ground_field(self, k, m):
        d = total_differential(BicomplexLayout.first_quadrant(k, m), m + 1)
        if m % 2 == 0:
            assert d.is_zero()
        else:
            assert rank(d) == d.rows


class TestChains:
    def test_from_rows_places_components_by_degree(self, k):
        layout = BicomplexLayout.first_quadrant(k, 2)
        chain = ChainVector.from_rows(layout, 2, {2: k.unit_element().tensor_power(3).scale(-2), 0: k.unit_element()})
        assert chain.component(0).coords == {0: -2}
        assert chain.component(2).coords == {0: 1}
        assert chain.component(1).is_zero()
        assert chain.flatten().coords == (-2, 0, 1)

    def test_flatten_unflatten(self, dual):
        layout = BicomplexLayout.first_quadrant(dual, 2)
        chain = ChainVector.from_rows(layout, 2, {1: dual.basis_element(1).tensor(dual.unit_element())})
        again = ChainVector.unflatten(layout, 2, chain.flatten())
        assert again.same_as(chain)

    def test_boundary_of_boundary(self, dual):
        layout = BicomplexLayout.first_quadrant(dual, 3)
        x = dual.basis_element(1).tensor_power(4)
        chain = ChainVector.from_rows(layout, 3, {3: x})
        assert boundary(boundary(chain)).is_zero()

    def test_periodicity_shift_drops_two_columns(self, k):
        layout = BicomplexLayout.first_quadrant(k, 2)
        ones = {q: k.unit_element().tensor_power(q + 1) for q in range(3)}
        chain = ChainVector.from_rows(layout, 2, ones)
        shifted = periodicity_shift(chain)
        assert shifted.degree == 0
        assert shifted.components.keys() == {0}
        assert shifted.by_row() == {0: ones[0]}
