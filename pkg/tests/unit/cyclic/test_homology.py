from __future__ import annotations

import pytest

import dense_oracle
from cyclichom.algebra import build, matrix_algebra, parse_expression, upper_triangular_algebra
from cyclichom.chern.generators import u_generator
from cyclichom.core.enums import GroupKind
from cyclichom.core.errors import GuardrailExceededError, NotACycleError, TruncationError
from cyclichom.cyclic import (
    BicomplexLayout,
    ChainVector,
    boundary,
    hc,
    hc_minus0,
    hc_per0,
    hh,
    homology_in,
    periodicity_shift,
    s_map,
)
from cyclichom.linalg import rank
from cyclichom.linalg.field import FieldSpec


def _algebra(expression: str, field: FieldSpec | None = None):
    return build(parse_expression(expression), field)


class TestGroundField:
    @pytest.mark.parametrize("n", range(0, 9))
    def test_cyclic_homology_alternates(self, k, n):
        assert hc(k, n).dim == (1 if n % 2 == 0 else 0)

    @pytest.mark.parametrize("n", range(0, 6))
    def test_hochschild_homology(self, k, n):
        assert hh(k, n).dim == (1 if n == 0 else 0)

    def test_representatives_are_cycles(self, k):
        for group in (hc(k, 4), hc(k, 2)):
            for rep in group.representatives:
                assert boundary(rep).is_zero()
            assert [group.coords(r) for r in group.representatives] == [(1,)]

    def test_coords_reject_non_cycles(self, k):
        group = hc(k, 2)
        chain = ChainVector.from_rows(group.layout, 2, {0: k.unit_element()})
        with pytest.raises(NotACycleError):
            group.coords(chain)

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_prime_fields(self, p):
        k = _algebra("ground_field", FieldSpec.prime(p))
        assert [hc(k, n).dim for n in range(5)] == [1, 0, 1, 0, 1]

    def test_name(self, k):
        assert hc(k, 2).name == "HC_2(ground_field)"
        assert hc(k, 2).group == GroupKind.HC


class TestPeriodicity:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_s_sends_u_n_to_u_n_minus_one(self, k, n):
        source, target = hc(k, 2 * n), hc(k, 2 * n - 2)
        shifted = periodicity_shift(u_generator(n), target.layout)
        assert target.coords(shifted) == target.coords(u_generator(n - 1))
        matrix = s_map(k, n, source, target)
        assert matrix.shape == (1, 1) and not matrix.is_zero()

    def test_s_map_over_upper_triangular(self):
        t = upper_triangular_algebra(_algebra("ground_field"))
        matrix = s_map(t, 1)
        assert matrix.shape == (2, 2)
        assert rank(matrix) == 2

    def test_tower_limit_of_ground_field(self, k):
        limit = hc_per0(k, 3)
        assert limit.dim == 1
        assert limit.stabilized
        assert [g.dim for g in limit.groups] == [1, 1, 1, 1]
        assert not limit.approximate


class TestNegativeWindow:
    def test_ground_field(self, k):
        group = hc_minus0(k, 3)
        assert group.dim == 1
        assert group.stabilized is True
        assert group.window == 3
        assert group.group == GroupKind.HC_MINUS

    def test_matrix_algebra_with_refused_comparison(self, k):
        m2 = matrix_algebra(k, 2)
        group = hc_minus0(m2, 2, cap=20_000)
        assert group.dim == 1
        assert group.stabilized is None

    def test_window_itself_refused(self, k):
        m2 = matrix_algebra(k, 2)
        with pytest.raises(GuardrailExceededError):
            hc_minus0(m2, 4, cap=20_000)

    def test_window_layout(self, k):
        assert hc_minus0(k, 1).layout == BicomplexLayout.negative(k, 1)


class TestAgainstDenseOracle:
    @pytest.mark.parametrize(
        "expression,max_degree",
        [
            ("dual_numbers", 3),
            ("product(k, k)", 3),
            ("upper_triangular(k)", 2),
            ("truncated_poly(3)", 2),
        ],
    )
    def test_cyclic_dimensions(self, expression, max_degree):
        a = _algebra(expression)
        for n in range(max_degree + 1):
            assert hc(a, n).dim == dense_oracle.hc_dim(a, n), (expression, n)

    @pytest.mark.parametrize("expression", ["dual_numbers", "upper_triangular(k)", "truncated_poly(3)"])
    def test_hochschild_dimensions(self, expression):
        a = _algebra(expression)
        for n in range(3):
            assert hh(a, n).dim == dense_oracle.hh_dim(a, n), (expression, n)

    @pytest.mark.parametrize("n", [1, 2])
    def test_s_map_of_dual_numbers(self, dual, n):
        matrix = s_map(dual, n)
        assert matrix.shape == (dense_oracle.hc_dim(dual, 2 * n - 2), dense_oracle.hc_dim(dual, 2 * n))
        assert rank(matrix) == dense_oracle.s_power_rank(dual, n)

    def test_tower_limit_of_dual_numbers(self, dual):
        limit = hc_per0(dual, 2)
        assert [g.dim for g in limit.groups] == [dense_oracle.hc_dim(dual, 2 * j) for j in range(3)]
        assert [rank(s) for s in limit.s_maps] == [dense_oracle.s_power_rank(dual, j) for j in (1, 2)]
        assert limit.dim == dense_oracle.s_power_rank(dual, 2, steps=2)


class TestAdditivity:
    @pytest.mark.parametrize("n", range(0, 4))
    def test_upper_triangular_over_ground_field(self, k, n):
        t = upper_triangular_algebra(k)
        assert hc(t, n).dim == 2 * hc(k, n).dim
        assert hh(t, n).dim == 2 * hh(k, n).dim

    @pytest.mark.parametrize("n", range(0, 3))
    def test_upper_triangular_over_dual_numbers(self, dual, n):
        t = upper_triangular_algebra(dual)
        assert hc(t, n).dim == 2 * hc(dual, n).dim
        assert hh(t, n).dim == 2 * hh(dual, n).dim

    @pytest.mark.slow
    def test_upper_triangular_over_dual_numbers_degree_three(self, dual):
        t = upper_triangular_algebra(dual)
        assert hc(t, 3).dim == 2 * hc(dual, 3).dim
        assert hh(t, 3).dim == 2 * hh(dual, 3).dim

    def test_guardrail_refuses_large_degrees(self, dual):
        t = upper_triangular_algebra(dual)
        with pytest.raises(GuardrailExceededError):
            hc(t, 6, cap=20_000)


class TestMorita:
    @pytest.mark.parametrize("n", range(0, 4))
    def test_matrix_algebra_matches_ground_field(self, k, n):
        assert hc(matrix_algebra(k, 2), n).dim == hc(k, n).dim

    @pytest.mark.parametrize("n", range(0, 3))
    def test_hochschild_of_matrix_algebra(self, k, n):
        assert hh(matrix_algebra(k, 2), n).dim == hh(k, n).dim


class TestTruncation:
    @pytest.mark.parametrize("n", range(0, 4))
    def test_wider_first_quadrant_layout_keeps_dimensions(self, dual, n):
        wide = homology_in(BicomplexLayout.first_quadrant(dual, n + 2), n)
        assert wide.dim == hc(dual, n).dim
        assert wide.group == GroupKind.HC

    @pytest.mark.parametrize("n", range(0, 3))
    def test_taller_hochschild_column_keeps_dimensions(self, dual, n):
        assert homology_in(BicomplexLayout.hochschild(dual, n + 2), n).dim == hh(dual, n).dim

    def test_representatives_survive_the_wider_layout(self, k):
        wide = homology_in(BicomplexLayout.first_quadrant(k, 4), 2)
        assert wide.coords(u_generator(1)) != (0,)

    def test_missing_blocks_raise(self, k):
        with pytest.raises(TruncationError):
            homology_in(BicomplexLayout.first_quadrant(k, 0), 2)


class TestAdditivityAgainstDenseOracle:
    @pytest.mark.parametrize("n", [0, 1])
    def test_upper_triangular_over_dual_numbers(self, dual, n):
        t = upper_triangular_algebra(dual)
        expected = dense_oracle.hc_dim(t, n)
        assert expected == 2 * dense_oracle.hc_dim(dual, n)
        assert hc(t, n).dim == expected
        assert hh(t, n).dim == dense_oracle.hh_dim(t, n) == 2 * dense_oracle.hh_dim(dual, n)

    @pytest.mark.slow
    def test_upper_triangular_over_dual_numbers_degree_two(self, dual):
        t = upper_triangular_algebra(dual)
        assert hc(t, 2).dim == dense_oracle.hc_dim(t, 2) == 2 * dense_oracle.hc_dim(dual, 2)
        assert hh(t, 2).dim == dense_oracle.hh_dim(t, 2)
