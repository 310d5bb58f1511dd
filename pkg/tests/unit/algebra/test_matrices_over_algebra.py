from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclichom.algebra import (
    MatrixOverA,
    TensorElement,
    dual_numbers,
    generalized_trace,
    matrix_algebra,
    trace_matrix,
)
from cyclichom.core.errors import AlgebraMismatchError, NotInvertibleError
from cyclichom.cyclic.operators import bar_bprime, cyclic_ops, hochschild_b, norm_operator, one_minus_t
from cyclichom.linalg.field import FieldSpec

# b and b' lower the tensor arity by one, 1-t and N keep it
OPERATORS_AND_ARITY_DROP = ((hochschild_b, 1), (bar_bprime, 1), (one_minus_t, 0), (norm_operator, 0))


class TestMatrixOverA:
    def test_identity_is_idempotent(self, dual):
        assert MatrixOverA.identity(dual, 2).is_idempotent()
        assert MatrixOverA.elementary(dual, 2, 0, 0).is_idempotent()
        assert not MatrixOverA.elementary(dual, 2, 0, 1).is_idempotent()

    def test_element_round_trip(self, dual):
        g = MatrixOverA.from_coords(dual, [[[1, 0], [0, 1]], [[0, 1], [1, 0]]])
        assert MatrixOverA.from_element(g.to_element()) == g
        assert g.to_element().algebra is matrix_algebra(dual, 2)

    def test_inverse(self, dual):
        # [[1, eps], [eps, 1]] is invertible over the dual numbers
        g = MatrixOverA.from_coords(dual, [[[1, 0], [0, 1]], [[0, 1], [1, 0]]])
        one = MatrixOverA.identity(dual, 2)
        assert g @ g.inverse() == one
        assert g.inverse() @ g == one

    def test_non_invertible(self, k):
        with pytest.raises(NotInvertibleError):
            MatrixOverA.elementary(k, 2, 0, 0).inverse()

    def test_conjugate_keeps_idempotence(self, dual):
        g = MatrixOverA.from_coords(dual, [[[1, 0], [0, 1]], [[0, 1], [1, 0]]])
        e = MatrixOverA.elementary(dual, 2, 0, 0)
        assert g.conjugate(e).is_idempotent()
        assert g.conjugate(e) != e


class TestGeneralizedTrace:
    def test_trace_of_matrix_units(self, k):
        m2 = matrix_algebra(k, 2)
        e12, e21 = m2.basis_element(1), m2.basis_element(2)
        # E12 ⊗ E21 closes the index cycle 1 -> 2 -> 1
        assert generalized_trace(e12.tensor(e21)).coords == {0: 1}
        assert generalized_trace(e12.tensor(e12)).is_zero()
        assert generalized_trace(m2.unit_element()).coords == {0: 2}

    def test_trace_needs_matrix_construction(self, dual):
        with pytest.raises(AlgebraMismatchError):
            generalized_trace(dual.unit_element())

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_trace_commutes_with_differentials(self, k, n):
        outer = matrix_algebra(k, 2)
        for outer_op, inner_op in ((hochschild_b, hochschild_b), (bar_bprime, bar_bprime)):
            left = trace_matrix(outer, n) @ outer_op(outer, n)
            right = inner_op(k, n) @ trace_matrix(outer, n + 1)
            assert left == right

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_trace_commutes_with_cyclic_operators(self, dual, n):
        outer = matrix_algebra(dual, 2)
        for op in (one_minus_t, norm_operator):
            assert trace_matrix(outer, n + 1) @ op(outer, n) == op(dual, n) @ trace_matrix(outer, n + 1)

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_trace_commutes_with_rotation(self, dual, n):
        outer = matrix_algebra(dual, 2)
        t_out, _ = cyclic_ops(outer, n)
        t_in, _ = cyclic_ops(dual, n)
        assert trace_matrix(outer, n + 1) @ t_out == t_in @ trace_matrix(outer, n + 1)

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_trace_is_a_chain_map_on_random_tensors(self, data):
        dual = dual_numbers(FieldSpec.rationals())
        n = data.draw(st.integers(1, 2))
        op, drop = data.draw(st.sampled_from(OPERATORS_AND_ARITY_DROP))
        outer = matrix_algebra(dual, 2)
        size = outer.dim ** (n + 1)
        coords = data.draw(
            st.dictionaries(st.integers(0, size - 1), st.integers(-5, 5).filter(bool), max_size=12)
        )
        x = TensorElement.from_sparse(outer, n + 1, coords)
        op_x = TensorElement.from_sparse(outer, n + 1 - drop, op(outer, n).apply_sparse(x.coords))
        tr_x = generalized_trace(x)
        op_tr = TensorElement.from_sparse(dual, n + 1 - drop, op(dual, n).apply_sparse(tr_x.coords))
        assert generalized_trace(op_x) == op_tr
