from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tiltcount.linalg import identity, inverse, matmul, nullspace, rank, rref

matrices = st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=1, max_size=5))


def test_rank_examples():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[Fraction(1, 2), 1], [1, Fraction(1, 3)]]) == 2
    assert rank([]) == 0


@given(matrices)
def test_rank_agrees_with_rref(m):
    assert rank(m) == len(rref(m)[1])


@given(matrices)
def test_nullspace_is_kernel_of_right_size(m):
    ncols = len(m[0])
    basis = nullspace(m, ncols)
    assert len(basis) == ncols - rank(m)
    for vec in basis:
        assert all(isinstance(x, int) for x in vec)
        assert all(sum(a * b for a, b in zip(row, vec)) == 0 for row in m)
    if basis:
        assert rank(basis) == len(basis)


def test_inverse_and_identity():
    a = [[2, 1], [1, 1]]
    assert matmul(a, inverse(a)) == identity(2)
    with pytest.raises(ValueError):
        inverse([[1, 2], [2, 4]])
    assert matmul([], [[1]]) == []
