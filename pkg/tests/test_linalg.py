from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hemicones.errors import ExactnessError, ZeroVector
from hemicones.linalg import (
    RationalRowBasis,
    bareiss_rank,
    check_exact,
    dot,
    invert_columns,
    kernel_basis,
    primitive_int_vector,
    vec_gcd,
)


def test_check_exact_rejects_floats():
    with pytest.raises(ExactnessError):
        check_exact(2.0)
    with pytest.raises(ExactnessError):
        check_exact(True)
    for x in (1, -2, Fraction(1, 3)):
        check_exact(x)


def test_vec_gcd():
    assert vec_gcd([4, -6, 10]) == 2
    assert vec_gcd([0, 0, 7]) == 7
    assert vec_gcd([0, 0]) == 0


def test_primitive_int_vector_integers():
    assert primitive_int_vector([4, -6, 10]) == (2, -3, 5)
    assert primitive_int_vector([3, 6]) == (1, 2)


def test_primitive_int_vector_fractions():
    assert primitive_int_vector([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)
    assert primitive_int_vector([Fraction(-2, 4), Fraction(1, 2)]) == (-1, 1)


def test_primitive_int_vector_zero_raises():
    with pytest.raises(ZeroVector):
        primitive_int_vector([0, 0, 0])


def test_dot_strict():
    assert dot((1, 2, 3), (4, 5, 6)) == 32
    with pytest.raises(Exception):
        dot((1, 2), (1, 2, 3))


def test_bareiss_rank_small():
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    assert bareiss_rank([[1, 0], [0, 1]]) == 2
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    assert bareiss_rank([]) == 0


def test_bareiss_rank_rectangular():
    rows = [[1, 2, 3], [4, 5, 6], [7, 8, 9]]
    assert bareiss_rank(rows) == 2
    assert bareiss_rank([[2, 4, 6]]) == 1


def test_bareiss_needs_column_pivoting():
    # leading zeros force a pivot search beyond the diagonal
    rows = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    assert bareiss_rank(rows) == 3


@given(st.lists(st.lists(st.integers(-9, 9), min_size=4, max_size=4),
                min_size=1, max_size=6))
def test_bareiss_matches_fraction_elimination(rows):
    basis = RationalRowBasis(4)
    for r in rows:
        basis.add(r)
    assert bareiss_rank(rows) == basis.rank


def test_rational_row_basis_incremental():
    b = RationalRowBasis(3)
    assert b.rank == 0
    assert b.would_increase_rank([1, 0, 0])
    b.add([1, 0, 0])
    assert b.rank == 1
    assert not b.would_increase_rank([2, 0, 0])
    b.add([2, 0, 0])
    assert b.rank == 1
    b.add([1, 1, 0])
    b.add([0, 0, 5])
    assert b.rank == 3
    assert not b.would_increase_rank([7, -3, 2])


def test_kernel_basis_simple():
    # x + y + z = 0 has a 2-dimensional kernel
    ker = kernel_basis([[1, 1, 1]], 3)
    assert len(ker) == 2
    for v in ker:
        assert sum(v) == 0
        assert all(isinstance(c, int) for c in v)


def test_kernel_basis_full_rank_is_empty():
    assert kernel_basis([[1, 0], [0, 1]], 2) == []


@given(st.lists(st.lists(st.integers(-5, 5), min_size=5, max_size=5),
                min_size=1, max_size=4))
def test_kernel_vectors_annihilate(rows):
    ker = kernel_basis(rows, 5)
    assert len(ker) == 5 - bareiss_rank(rows)
    for v in ker:
        for r in rows:
            assert dot(r, v) == 0


def test_invert_columns_identity():
    cols = invert_columns([[2, 0], [0, 3]])
    # column j of the inverse satisfies A x = e_j
    assert list(cols[0]) == [Fraction(1, 2), Fraction(0)]
    assert list(cols[1]) == [Fraction(0), Fraction(1, 3)]


def test_invert_columns_singular_raises():
    with pytest.raises(ZeroVector):
        invert_columns([[1, 2], [2, 4]])


@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3),
                min_size=3, max_size=3))
def test_invert_columns_property(rows):
    if bareiss_rank(rows) < 3:
        with pytest.raises(ZeroVector):
            invert_columns(rows)
        return
    cols = invert_columns(rows)
    for j in range(3):
        image = [sum(Fraction(rows[i][t]) * cols[j][t] for t in range(3))
                 for i in range(3)]
        expected = [Fraction(int(i == j)) for i in range(3)]
        assert image == expected
