import pytest
from hypothesis import given
from hypothesis import strategies as st

from kfib import factorization as fz
from kfib.errors import IndexOutOfRange, VanishingIndex
from kfib.indexing import is_vanishing
from kfib.polycore import ONE, parse
from kfib.recurrence import fib_poly


def test_factorize_examples():
    f = fz.factorize(8, 3)
    assert (f.r, f.rho, f.Q_xi) == (2, 2, parse("6 + 4x + x^2"))
    f = fz.factorize(-16, 3)
    assert (f.r, f.rho, f.Q_xi) == (2, 2, parse("10 + 4x"))
    f = fz.factorize(1, 5)
    assert (f.r, f.rho, f.Q_xi) == (0, 0, ONE)
    with pytest.raises(VanishingIndex):
        fz.factorize(-10, 4)


@given(st.integers(-150, 150), st.integers(2, 7))
def test_factorization_invariants(n, k):
    if is_vanishing(n, k):
        return
    f = fz.factorize(n, k)
    assert f.expand() == fib_poly(n, k)
    assert f.Q_xi.coeff(0) != 0
    assert f.Q_xi(-1) != 0
    assert fz.is_squarefree_away_from_special(f)


def test_closed_form_small():
    assert fz.closed_form_small(5, 4) == parse("1 + x^4") ** 3
    assert fz.closed_form_small(2, 6) == parse("x^5")
    assert fz.closed_form_small(4, 3) == parse("1 + x^3") ** 2
    with pytest.raises(IndexOutOfRange):
        fz.closed_form_small(5, 3)


def test_xks_family():
    assert fib_poly(-10, 5) == parse("-2x - x^6")
    assert fz.check_xks_family(5, 2)
    assert fz.check_xks_family(3, 3)
    assert fz.check_xks_family(4, 4)
    assert not fz.check_xks_family(3, 5)


def test_period_shift():
    assert fz.period_shift_identity(3, 3)
    assert fz.period_shift_identity(1, 4)
    with pytest.raises(VanishingIndex):
        fz.period_shift_identity(-8, 3)


def test_scan_examples():
    assert (-14, (3,)) in fz.scan_vanishing_coefficients(3, -20, -1)
    assert (-66, (5, 10)) in fz.scan_vanishing_coefficients(5, -70, -60)
    assert fz.scan_vanishing_coefficients(4, -40, -1) == []


def test_scan_against_direct_gap_search():
    for n, missing in fz.scan_vanishing_coefficients(3, -60, 0):
        F = fib_poly(n, 3)
        r = F.valuation
        gaps = [e - r for e in range(r, F.degree + 1, 3) if F.coeff(e) == 0]
        assert tuple(gaps) == missing


@pytest.mark.parametrize("n, k, text", [
    (-17, 3, "(1+x^3)(1-x^3)(1-5x^3-5x^6-x^9)"),
    (-16, 3, "2x^2(1+x^3)^2(5+2x^3)"),
    (-12, 4, "-x(1+x^4)(3+x^4)"),
    (8, 3, "x^2(1+x^3)^2(6+4x^3+x^6)"),
])
def test_render_factored(n, k, text):
    assert fz.factorize(n, k).render() == text
