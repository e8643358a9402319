"""Left-justified k-nomial triangle for positive and negative rows.

Row m >= 0 holds the coefficients of (1 + x + ... + x^{k-1})^m. Row m < 0
holds the power-series coefficients of (1 + x + ... + x^{k-1})^{-|m|}, an
infinite row that is generated to whatever width is asked for.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator

from .indexing import binom, check_k
from .polycore import IntPoly


def coeff_pos(k: int, n: int, j: int) -> int:
    """C_k(n, j) via the alternating binomial sum."""
    if n < 0:
        raise ValueError("coeff_pos needs n >= 0")
    if j < 0 or j > (k - 1) * n:
        return 0
    if n == 0:
        return 1 if j == 0 else 0
    total = 0
    for s in range(j // k + 1):
        total += (-1) ** s * binom(n, s) * binom(n + j - k * s - 1, n - 1)
    return total


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Tuples (i_1..i_parts) of nonnegative ints with sum_t t*i_t == total."""
    if parts == 1:
        yield (total,)
        return
    for last in range(total // parts + 1):
        for head in _compositions(total - parts * last, parts - 1):
            yield head + (last,)


def coeff_pos_multinomial(k: int, n: int, j: int) -> int:
    """C_k(n, j) from the multinomial expansion; slow reference route."""
    if j < 0:
        return 0
    total = 0
    nf = factorial(n)
    # i_2 + 2 i_3 + ... + (k-1) i_k = j, with i_1 = n - sum(i)
    for combo in _compositions(j, k - 1):
        used = sum(combo)
        if used > n:
            continue
        den = factorial(n - used)
        for c in combo:
            den *= factorial(c)
        total += nf // den
    return total


def coeff_neg(k: int, m: int, j: int) -> int:
    """C_k(m, j) for m < 0 via the alternating binomial sum."""
    if m >= 0:
        raise ValueError("coeff_neg needs m < 0")
    if j < 0:
        return 0
    a = -m
    total = 0
    for s in range(j // k + 1):
        t = j - k * s
        total += (-1) ** t * binom(a, t) * binom(a + s - 1, a - 1)
    return total


def series_inverse_power(k: int, power: int, order: int) -> list[int]:
    """Coefficients 0..order of (1 + x + ... + x^{k-1})^{-power} by direct
    power-series division; independent reference for ``coeff_neg``."""
    base = [1] * k
    den = [1]
    for _ in range(power):
        nxt = [0] * min(len(den) + k - 1, order + 1)
        for i, a in enumerate(den):
            for t in range(k):
                if i + t <= order:
                    nxt[i + t] += a * base[t]
        den = nxt
    # den has constant term 1, so the reciprocal series has integer coefficients
    inv = [0] * (order + 1)
    inv[0] = 1
    for i in range(1, order + 1):
        acc = 0
        for t in range(1, min(i, len(den) - 1) + 1):
            acc += den[t] * inv[i - t]
        inv[i] = -acc
    return inv


@dataclass(frozen=True)
class TriangleRow:
    k: int
    m: int
    coeffs: tuple[int, ...]

    def __getitem__(self, j: int) -> int:
        if j < len(self.coeffs):
            return self.coeffs[j]
        if self.m >= 0:
            return 0
        return coeff_neg(self.k, self.m, j)

    def extend(self, width: int) -> TriangleRow:
        """A copy carrying at least ``width`` columns (negative rows only grow)."""
        if width <= len(self.coeffs) or self.m >= 0:
            return self
        extra = tuple(coeff_neg(self.k, self.m, j) for j in range(len(self.coeffs), width))
        return TriangleRow(self.k, self.m, self.coeffs + extra)


def row(k: int, m: int, width: int | None = None) -> TriangleRow:
    """Row m; positive rows are complete, negative rows get ``width`` columns."""
    check_k(k)
    if m >= 0:
        n_cols = (k - 1) * m + 1
        coeffs = tuple(coeff_pos(k, m, j) for j in range(n_cols))
        if width is not None:
            coeffs = coeffs[:width] + (0,) * max(0, width - n_cols)
        return TriangleRow(k, m, coeffs)
    if width is None:
        raise ValueError("negative rows are infinite; give a width")
    return TriangleRow(k, m, tuple(coeff_neg(k, m, j) for j in range(width)))


def assemble_pos(k: int, n: int) -> IntPoly:
    """F_{n,k}, n >= 1, from the diagonal sum of triangle entries C_k(n-h-1, h)."""
    check_k(k)
    if n < 1:
        raise ValueError("assemble_pos needs n >= 1")
    d = (k - 1) * (n - 1)
    terms = {}
    for h in range(d // k + 1):
        if n - h - 1 < 0:
            break
        c = coeff_pos(k, n - h - 1, h)
        if c:
            terms[d - h * k] = c
    return IntPoly(terms)


def diagonal(k: int, n: int) -> Iterator[tuple[int, int]]:
    """(row, column) cells read for F_{n,k}, n <= 0.

    Start at row -1, column |n| - k + 1; each step moves down one row and
    left k columns, stopping before the column becomes negative.
    """
    col = -n - k + 1
    m = -1
    while col >= 0:
        yield m, col
        m -= 1
        col -= k


def assemble_neg(k: int, n: int) -> IntPoly:
    """F_{n,k}, n <= 0, from the diagonal reading of the negative rows."""
    check_k(k)
    if n > 0:
        raise ValueError("assemble_neg needs n <= 0")
    return IntPoly((col, coeff_neg(k, m, col)) for m, col in diagonal(k, n))


def tag_cells(k: int, ns: list[int], rows: int, cols: int) -> dict[tuple[int, int], int]:
    """Map visible (row, column) cells to the index n whose diagonal uses them."""
    out = {}
    for n in ns:
        for m, col in diagonal(k, n):
            if -m <= rows and col < cols:
                out[(m, col)] = n
    return out


@lru_cache(maxsize=None)
def _letters() -> tuple[str, ...]:
    return tuple("abcdefghijk") + ("ℓ",) + tuple("mnopqrstuvwxyz")


def published_tags(k: int, rows: int, cols: int) -> dict[tuple[int, int], str]:
    """Letter tags a, b, c, ... assigned to n = -(k-1), -k, ... in order."""
    ns = list(range(-(k - 1), -(k - 1) - cols, -1))
    letters = _letters()
    cells = tag_cells(k, ns, rows, cols)
    return {cell: letters[-(n + k - 1)] for cell, n in cells.items() if -(n + k - 1) < len(letters)}
