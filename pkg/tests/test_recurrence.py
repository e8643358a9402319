import threading

from hypothesis import given
from hypothesis import strategies as st

from kfib.polycore import ZERO, IntPoly, parse
from kfib.recurrence import SequenceCache, fib_number, fib_poly, number_at_one


def test_poly_up_examples():
    assert fib_poly(3, 3) == parse("x + x^4")
    for k in range(2, 9):
        assert fib_poly(2, k) == IntPoly({k - 1: 1})
    assert fib_poly(10, 3) == parse("1 + 16x^3 + 45x^6 + 50x^9 + 28x^12 + 8x^15 + x^18")


def test_poly_down_examples():
    assert fib_poly(-12, 4) == parse("-x^9 - 4x^5 - 3x")
    assert fib_poly(-10, 4) == ZERO
    assert fib_poly(-9, 5) == parse("1 + x^5")


def test_seed_block():
    for k in range(2, 8):
        assert fib_poly(1, k) == parse("1")
        assert all(fib_poly(n, k) == ZERO for n in range(2 - k, 1))


def test_number_at_one_examples():
    assert number_at_one(-17, 3) == 0
    assert fib_poly(-17, 3)
    assert number_at_one(1, 2) == 1
    assert number_at_one(5, 3) == 7


def test_fib_numbers_k2_are_fibonacci():
    a, b = 0, 1
    for m in range(1, 40):
        assert fib_number(m, 2) == b
        a, b = b, a + b


@given(st.integers(-150, 150), st.integers(2, 7))
def test_recurrence_both_directions(n, k):
    # the upward rule must hold at every index, across the seed block too
    x = [IntPoly({e: 1}) for e in range(k)]
    rhs = ZERO
    for j in range(1, k + 1):
        rhs = rhs + x[k - j] * fib_poly(n - j, k)
    assert fib_poly(n, k) == rhs


def test_fresh_cache_agrees_in_any_fill_order():
    c = SequenceCache(4)
    assert c.poly(-60) == fib_poly(-60, 4)
    assert c.poly(60) == fib_poly(60, 4)


def test_threaded_fill():
    c = SequenceCache(5)
    out = {}

    def work(n):
        out[n] = c.poly(n)

    threads = [threading.Thread(target=work, args=(n,)) for n in (-80, 80, -40, 40)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(out[n] == fib_poly(n, 5) for n in out)
