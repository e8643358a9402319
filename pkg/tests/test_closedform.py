from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kfib import closedform
from kfib.errors import VanishingIndex
from kfib.factorization import factorize
from kfib.indexing import is_vanishing, quotient_remainder
from kfib.polycore import ONE, ZERO, parse
from kfib.recurrence import fib_poly


def test_multinomial_examples():
    assert closedform.multinomial_neg(-8, 3) == parse("1 + 2x^3 + x^6")
    assert closedform.multinomial_neg(-4, 3) == ZERO
    assert closedform.multinomial_neg(-4, 5) == ONE


def test_genfun_examples():
    s3 = closedform.genfun_series_neg(3, 10)
    assert s3[5] == parse("1 + x^3")
    for k in range(2, 7):
        assert closedform.genfun_series_neg(k, k)[k - 1] == ONE
    s4 = closedform.genfun_series_neg(4, 8)
    assert s4[5] == ZERO and s4[6] == ZERO


@given(st.integers(2, 6), st.integers(-45, 0))
def test_three_constructions_agree(k, n):
    F = fib_poly(n, k)
    assert closedform.multinomial_neg(n, k) == F
    assert closedform.genfun_series_neg(k, -n)[-n] == F


def test_sigma_pos_examples():
    s = closedform.sigma(10, 3)
    assert s.root_sum == -8
    assert s.root_product == 1
    s = closedform.sigma(3, 3)
    assert s.N == 1 and s.root_sum == -1


def test_sigma_neg_examples():
    # exact polynomial is the arbiter: Q_-12 = -x(x^8 + 4x^4 + 3), xi-roots -1 and -3
    assert closedform.root_sum(-12, 4) == -4
    assert closedform.root_sum(-8, 3) == -2
    q, r = quotient_remainder(-7, 2)
    assert r == 0 and closedform.root_sum(-7, 2) == -(2 * q - 3)
    with pytest.raises(VanishingIndex):
        closedform.sigma_neg(-10, 4)


def vieta_from_poly(n, k):
    # ratios of coefficients of P(xi), read directly off the exact polynomial
    P = factorize(n, k).P_xi
    lead = P.coeff(P.degree)
    return tuple(Fraction((-1) ** h * P.coeff(P.degree - h), lead) for h in range(1, P.degree + 1))


@given(st.integers(2, 6), st.integers(-80, 80))
def test_sigma_matches_vieta(k, n):
    if is_vanishing(n, k) or n in (1, 2):
        return
    spec = closedform.sigma(n, k)
    assert spec.sigma == vieta_from_poly(n, k)
    if n > 0:
        assert spec.root_sum == -(n - 2)
        assert all(v.denominator == 1 for v in spec.sigma)
