from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kfib.errors import BothZero, DivisorZero, NotDivisible
from kfib.polycore import (ONE, ZERO, IntPoly, add, content_and_gcd, derivative, divide_exact,
                           eval_rational, mul, mul_monomial, parse, render)


def P(text):
    return parse(text)


polys = st.dictionaries(st.integers(0, 12), st.integers(-40, 40), max_size=6).map(IntPoly)
nonzero_polys = polys.filter(bool)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def dense_mul(a, b):
    # schoolbook convolution on dense coefficient lists, independent of IntPoly.mul
    da, db = a.dense(), b.dense()
    if not da or not db:
        return []
    out = [0] * (len(da) + len(db) - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return out


def horner(p, x):
    acc = Fraction(0)
    for c in reversed(p.dense()):
        acc = acc * x + c
    return acc


class TestCanonicalForm:
    def test_zero_is_empty(self):
        assert IntPoly({3: 0, 5: 0}) == ZERO
        assert not ZERO.terms
        assert ZERO.degree is None

    def test_no_zero_coefficients_stored(self):
        p = IntPoly({0: 1, 3: 1}) + IntPoly({3: -1})
        assert p.terms == {0: 1}

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            IntPoly({-1: 2})

    def test_degree_and_valuation(self):
        p = P("-x^9 - 4x^5 - 3x")
        assert (p.degree, p.valuation) == (9, 1)
        assert p.leading_term() == (-1, 9)
        assert p.lowest_term() == (-3, 1)


class TestArithmetic:
    def test_add_examples(self):
        assert add(P("1 + x^3"), P("-x^3")) == ONE
        p = P("1 + 2x^3 + x^6")
        assert add(ZERO, p) == p
        assert add(p, p) == P("2 + 4x^3 + 2x^6")

    def test_mul_monomial_examples(self):
        assert mul_monomial(P("1 + x"), 1, 2) == P("x^2 + x^3")
        assert mul_monomial(P("1 + x"), 0, 5) == ZERO
        assert mul_monomial(P("1 + 2x^3"), -1, 1) == P("-x - 2x^4")

    def test_mul_examples(self):
        assert mul(P("1 + x^3"), P("1 + x^3")) == P("1 + 2x^3 + x^6")
        assert mul(P("1 + x"), ZERO) == ZERO
        assert mul(P("1 - x"), P("1 + x + x^2 + x^3")) == P("1 - x^4")

    def test_divide_examples(self):
        assert divide_exact(P("1 + 2x^3 + x^6"), P("1 + x^3")) == P("1 + x^3")
        with pytest.raises(NotDivisible):
            divide_exact(P("1 + x^3"), P("x"))
        assert divide_exact(P("-x^9 - 4x^5 - 3x"), P("-x")) == P("x^8 + 4x^4 + 3")
        with pytest.raises(DivisorZero):
            divide_exact(P("1 + x"), ZERO)

    def test_eval_examples(self):
        assert eval_rational(P("1 + 2x^3 + x^6"), 1) == 4
        assert eval_rational(P("7 + x^4"), 0) == 7
        assert eval_rational(P("1 - 5x^3 - 6x^6 + 4x^9 + 5x^12 + x^15"), 1) == 0
        assert eval_rational(P("1 + x"), Fraction(-1, 2)) == Fraction(1, 2)

    def test_derivative_examples(self):
        assert derivative(P("x^2")) == P("2x")
        assert derivative(P("5")) == ZERO
        assert derivative(P("1 + 2x^3 + x^6")) == P("6x^2 + 6x^5")

    def test_gcd_examples(self):
        # the true gcd; a stated example of x here contradicts the gcd definition
        assert content_and_gcd(P("x^2"), P("x^3")) == P("x^2")
        assert content_and_gcd(P("1 + x^3"), P("1 - x^3")) == ONE
        T8 = P("x^2") * P("1 + x^3") ** 2 * P("6 + 4x^3 + x^6")
        g = content_and_gcd(T8, derivative(T8))
        assert g == P("x + x^4")
        with pytest.raises(BothZero):
            content_and_gcd(ZERO, ZERO)


class TestRendering:
    @pytest.mark.parametrize("text", ["1 - 5x^3 - 6x^6 + 4x^9 + 5x^12 + x^15", "-x", "0", "3", "x^2 + x"])
    def test_parse_render_round_trip(self, text):
        p = P(text)
        assert P(render(p)) == p

    def test_json_round_trip(self):
        p = P("-4x - 9x^4 - 6x^7 - x^10") * 10 ** 30
        assert IntPoly.from_json(p.to_json()) == p


class TestProperties:
    @given(polys, polys, polys)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + ZERO == a and a * ONE == a and a - a == ZERO

    @given(polys, polys)
    def test_mul_matches_schoolbook(self, a, b):
        assert (a * b).dense() == dense_mul(a, b)

    @given(polys, nonzero_polys)
    def test_divide_round_trip(self, a, b):
        assert divide_exact(a * b, b) == a

    @given(polys, polys, rationals)
    def test_eval_homomorphism(self, a, b, x):
        assert eval_rational(a + b, x) == eval_rational(a, x) + eval_rational(b, x)
        assert eval_rational(a * b, x) == eval_rational(a, x) * eval_rational(b, x)
        assert eval_rational(a, x) == horner(a, x)

    @settings(max_examples=200)
    @given(polys, polys)
    def test_derivative_leibniz(self, a, b):
        assert derivative(a * b) == derivative(a) * b + a * derivative(b)

    @settings(max_examples=200)
    @given(nonzero_polys, nonzero_polys, nonzero_polys)
    def test_gcd_divides_and_contains_common_factor(self, a, b, c):
        g = content_and_gcd(a * c, b * c)
        divide_exact(a * c, g)
        divide_exact(b * c, g)
        divide_exact(g, c.primitive())
