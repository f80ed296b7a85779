from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vecauto.errors import DimensionError
from vecauto.linalg import (
    RowVector,
    SquareMatrix,
    bits,
    common_form,
    elementary_matrix,
    format_rational,
    mat_mul,
    parse_rational,
    rat,
    swap_matrix,
    vec_mat_mul,
)

small_rats = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def vectors(k):
    return st.lists(small_rats, min_size=k, max_size=k).map(RowVector)


def matrices(k):
    return st.lists(st.lists(small_rats, min_size=k, max_size=k), min_size=k, max_size=k).map(
        SquareMatrix
    )


def test_elementary_row_product():
    assert RowVector([5, 3, 1]) @ elementary_matrix(2, 3, -1) == RowVector([2, 3, 1])


def test_first_doubling_matrix():
    m1 = elementary_matrix(1, 2, 2)
    assert m1.rows == ((2, 0), (0, 1))
    assert vec_mat_mul(RowVector([1, 1]), m1) == RowVector([2, 1])


def test_identity_product():
    v = RowVector([Fraction(1, 3), -2, 7])
    assert v @ SquareMatrix.identity(3) == v


def test_elementary_minus_one_layout():
    e = elementary_matrix(2, 3, -1)
    expected = [[1, 0, 0], [-1, 1, 0], [0, 0, 1]]
    assert e == SquareMatrix(expected)


def test_elementary_zero_is_identity():
    assert elementary_matrix(3, 4, 0) == SquareMatrix.identity(4)


def test_swap_examples():
    a, b, c = Fraction(1), Fraction(2, 3), Fraction(-5)
    assert RowVector([a, b, c]) @ swap_matrix(3, 3) == RowVector([c, b, a])
    assert swap_matrix(1, 4) == SquareMatrix.identity(4)
    j = swap_matrix(2, 2)
    v = RowVector([4, 9])
    assert v @ j @ j == v
    assert j @ j == SquareMatrix.identity(2)


def test_scaling_inverse():
    prod = elementary_matrix(1, 2, 2) @ elementary_matrix(1, 2, Fraction(1, 2))
    assert prod == SquareMatrix.identity(2)


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        vec_mat_mul(RowVector([1, 2]), SquareMatrix.identity(3))
    with pytest.raises(DimensionError):
        mat_mul(SquareMatrix.identity(2), SquareMatrix.identity(3))
    with pytest.raises(DimensionError):
        SquareMatrix([[1, 2], [3]])


def test_no_column_convention():
    with pytest.raises(TypeError):
        SquareMatrix.identity(2) @ RowVector([1, 2])


def test_index_range():
    with pytest.raises(IndexError):
        elementary_matrix(0, 3, 1)
    with pytest.raises(IndexError):
        swap_matrix(4, 3)


def test_canonical_rationals():
    a, b = rat(2, 4), rat(1, 2)
    assert a == b and (a.numerator, a.denominator) == (b.numerator, b.denominator)
    c = rat(1, -2)
    assert (c.numerator, c.denominator) == (-1, 2)


def test_rational_errors():
    with pytest.raises(ZeroDivisionError):
        rat(1, 0)
    with pytest.raises(ZeroDivisionError):
        parse_rational("3/0")
    with pytest.raises(TypeError):
        rat(0.5)


def test_rational_text():
    assert format_rational(Fraction(-3, 10)) == "-3/10"
    assert format_rational(Fraction(2)) == "2"
    assert parse_rational("-3/10") == Fraction(-3, 10)
    assert parse_rational("4/2") == 2


def test_json_forms():
    m = SquareMatrix([[Fraction(1, 2), 0], [3, -1]])
    assert m.to_json() == [["1/2", "0"], ["3", "-1"]]
    assert RowVector([Fraction(-3, 10), 2]).to_json() == ["-3/10", "2"]


def test_bits_and_common_form():
    assert bits(Fraction(5, 16)) == 5
    assert bits(Fraction(0)) == 1
    assert common_form([Fraction(1, 2), Fraction(-3, 4)]) == (3, 4)


@given(st.integers(1, 4).flatmap(lambda k: st.tuples(vectors(k), matrices(k), matrices(k))))
@settings(max_examples=60, deadline=None)
def test_associativity(vmn):
    v, m, n = vmn
    assert (v @ m) @ n == v @ (m @ n)


@given(
    st.integers(2, 5).flatmap(
        lambda k: st.tuples(st.just(k), st.integers(2, k), vectors(k), small_rats)
    )
)
@settings(max_examples=60, deadline=None)
def test_elementary_adds_multiple(args):
    k, i, v, c = args
    out = v @ elementary_matrix(i, k, c)
    assert out[0] == v[0] + c * v[i - 1]
    assert out.entries[1:] == v.entries[1:]


@given(st.integers(1, 5).flatmap(lambda k: st.tuples(vectors(k), small_rats)))
@settings(max_examples=40, deadline=None)
def test_elementary_first_scales(args):
    v, c = args
    out = v @ elementary_matrix(1, v.dim, c)
    assert out[0] == c * v[0]
    assert out.entries[1:] == v.entries[1:]


@given(st.integers(1, 4).flatmap(lambda k: st.tuples(vectors(k), matrices(k))))
@settings(max_examples=60, deadline=None)
def test_product_bit_bound(vm):
    # in common-denominator form the product gains at most the matrix's bits plus log2 k
    v, m = vm
    k = v.dim

    def form_bits(values):
        num, den = common_form(values)
        return max(num.bit_length(), den.bit_length())

    grow = form_bits(list(m.entries())) + (k - 1).bit_length()
    for x in v @ m:
        assert bits(x) <= form_bits(v) + grow


@given(st.lists(small_rats, min_size=1, max_size=5))
def test_text_round_trip(values):
    for x in values:
        assert parse_rational(format_rational(x)) == x
