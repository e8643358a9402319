"""Ground-truth construction of F_{n,k} by iterating the recurrence.

Upward:   F_n = x^{k-1} F_{n-1} + x^{k-2} F_{n-2} + ... + F_{n-k}
Downward: F_n = F_{n+k} - sum_{j=1}^{k-1} x^j F_{n+j}

Both directions start from the seed block F_1 = 1, F_0 = ... = F_{-(k-2)} = 0.
"""

from __future__ import annotations

import threading
from functools import lru_cache

from .indexing import check_k
from .polycore import ONE, ZERO, IntPoly


def _shift_add(acc: dict[int, int], p: IntPoly, shift: int, sign: int) -> None:
    get = acc.get
    for e, c in p._terms.items():
        f = e + shift
        acc[f] = get(f, 0) + sign * c


def _finish(acc: dict[int, int]) -> IntPoly:
    return IntPoly._raw({e: c for e, c in acc.items() if c})


class SequenceCache:
    """Memoized F_{n,k} for one k, filled sequentially outward from the seeds.

    Fills take a lock so that a cache can be shared between threads; readers
    of already computed entries never block.
    """

    def __init__(self, k: int):
        check_k(k)
        self.k = k
        self._up: list[IntPoly] = [ZERO, ONE]       # index n >= 0 -> F_n
        self._down: list[IntPoly] = [ZERO]          # index m >= 0 -> F_{-m}
        for _ in range(1, k - 1):
            self._down.append(ZERO)
        self._lock = threading.Lock()

    def _get(self, n: int) -> IntPoly:
        return self._up[n] if n >= 0 else self._down[-n]

    def poly_up(self, n: int) -> IntPoly:
        if n < 1:
            raise ValueError(f"poly_up needs n >= 1, got {n}")
        if n >= len(self._up):
            with self._lock:
                k = self.k
                while len(self._up) <= n:
                    m = len(self._up)
                    acc: dict[int, int] = {}
                    for j in range(1, k + 1):
                        _shift_add(acc, self._get(m - j), k - j, 1)
                    self._up.append(_finish(acc))
        return self._up[n]

    def poly_down(self, n: int) -> IntPoly:
        if n > 0:
            raise ValueError(f"poly_down needs n <= 0, got {n}")
        m = -n
        if m >= len(self._down):
            with self._lock:
                k = self.k
                while len(self._down) <= m:
                    cur = -len(self._down)
                    acc = dict(self._get(cur + k)._terms)
                    for j in range(1, k):
                        _shift_add(acc, self._get(cur + j), j, -1)
                    self._down.append(_finish(acc))
        return self._down[m]

    def poly(self, n: int) -> IntPoly:
        return self.poly_up(n) if n >= 1 else self.poly_down(n)

    __getitem__ = poly

    def number_at_one(self, n: int) -> int:
        """F_{n,k}(1), which equals the k-generalized Fibonacci number F_{n+k-2,k}."""
        return sum(self.poly(n)._terms.values())


@lru_cache(maxsize=None)
def cache_for(k: int) -> SequenceCache:
    """Process-wide shared cache for one k."""
    return SequenceCache(k)


def fib_poly(n: int, k: int) -> IntPoly:
    return cache_for(k).poly(n)


def number_at_one(n: int, k: int) -> int:
    return cache_for(k).number_at_one(n)


def fib_number(m: int, k: int) -> int:
    """k-generalized Fibonacci number F_{m,k} with F_{k-1,k} = 1, any integer m."""
    return number_at_one(m - k + 2, k)
