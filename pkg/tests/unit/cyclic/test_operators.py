from __future__ import annotations

import pytest

from cyclichom.cyclic import bar_bprime, cyclic_ops, hochschild_b, norm_operator, one_minus_t
from cyclichom.core.errors import DimensionMismatchError


@pytest.mark.parametrize("n", range(1, 9))
def test_operator_closed_forms_over_ground_field(k, n):
    assert hochschild_b(k, n).to_rows() == [[1 if n % 2 == 0 else 0]]
    assert bar_bprime(k, n).to_rows() == [[1 if n % 2 else 0]]
    assert one_minus_t(k, n).to_rows() == [[2 if n % 2 else 0]]
    assert norm_operator(k, n).to_rows() == [[0 if n % 2 else n + 1]]


def test_faces_need_positive_degree(k):
    with pytest.raises(DimensionMismatchError):
        hochschild_b(k, 0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_simplicial_identities(dual, n):
    assert (hochschild_b(dual, n) @ hochschild_b(dual, n + 1)).is_zero()
    assert (bar_bprime(dual, n) @ bar_bprime(dual, n + 1)).is_zero()
    assert hochschild_b(dual, n) @ one_minus_t(dual, n) == one_minus_t(dual, n - 1) @ bar_bprime(dual, n)
    assert bar_bprime(dual, n) @ norm_operator(dual, n) == norm_operator(dual, n - 1) @ hochschild_b(dual, n)


def test_rotation_has_order_n_plus_one(dual):
    t, _ = cyclic_ops(dual, 2)
    assert (t @ t @ t) == (t @ t @ t @ t @ t @ t)
    power = t
    for _ in range(2):
        power = power @ t
    assert power.to_rows() == [[1 if r == c else 0 for c in range(8)] for r in range(8)]


def test_matrices_are_cached(dual):
    assert hochschild_b(dual, 2) is hochschild_b(dual, 2)
