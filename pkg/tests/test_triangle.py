from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kfib import triangle
from kfib.polycore import ZERO, parse
from kfib.recurrence import fib_poly


def brute_coeff(k, m, j):
    # count compositions: m digits in [0, k-1] summing to j
    return sum(1 for t in product(range(k), repeat=m) if sum(t) == j)


def test_coeff_pos_examples():
    assert triangle.coeff_pos(5, 3, 7) == 18 == brute_coeff(5, 3, 7)
    assert all(triangle.coeff_pos(k, n, 0) == 1 for k in range(2, 7) for n in range(8))
    assert all(triangle.coeff_pos(3, n - 2, 1) == n - 2 for n in range(3, 15))


@pytest.mark.parametrize("m, j, want", [(-2, 5, -4), (-3, 9, -18), (-1, 4, 1)])
def test_coeff_neg_examples(m, j, want):
    assert triangle.coeff_neg(4, m, j) == want


def test_table2_row():
    assert list(triangle.row(4, -3, 12).coeffs) == [1, -3, 3, -1, 3, -9, 9, -3, 6, -18, 18, -6]


@given(st.integers(2, 6), st.integers(0, 7))
def test_positive_rows(k, m):
    row = triangle.row(k, m).coeffs
    assert sum(row) == k ** m
    assert row == row[::-1]
    if m <= 5:
        assert list(row) == [brute_coeff(k, m, j) for j in range(len(row))]


@given(st.integers(2, 6), st.integers(1, 8))
def test_negative_row_times_positive_row_is_one(k, m):
    # (1 + ... + x^{k-1})^{-m} (1 + ... + x^{k-1})^m = 1 as power series
    width = 4 * k
    neg = triangle.row(k, -m, width).coeffs
    pos = triangle.row(k, m).coeffs
    prod = [sum(neg[i] * pos[j - i] for i in range(j + 1) if j - i < len(pos)) for j in range(width)]
    assert prod == [1] + [0] * (width - 1)


def test_assemble_examples():
    assert triangle.assemble_pos(3, 4) == parse("1 + x^3") ** 2
    assert triangle.assemble_pos(2, 2) == parse("x")
    assert triangle.assemble_pos(4, 5) == parse("1 + x^4") ** 3
    assert triangle.assemble_neg(4, -12) == parse("-x^9 - 4x^5 - 3x")
    assert triangle.assemble_neg(4, -5) == ZERO
    assert triangle.assemble_neg(4, -11) == parse("x^8 + 2x^4 + 1")


@given(st.integers(2, 6), st.integers(-60, 60))
def test_assembly_matches_recurrence(k, n):
    want = fib_poly(n, k)
    got = triangle.assemble_pos(k, n) if n >= 1 else triangle.assemble_neg(k, n)
    assert got == want


def test_published_tags_first_letters():
    tags = triangle.published_tags(4, 3, 12)
    assert tags[(-1, 0)] == "a" and tags[(-3, 3)] == "ℓ"
