"""Closed-form sums for F_{n,k}: the negative-index multinomial sum, the
generating-function series, and the elementary symmetric polynomials of the
xi-roots (xi = x^k)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import warnings

from .errors import VanishingIndex
from .indexing import binom, check_k, profile, quotient_remainder
from .polycore import ZERO, IntPoly, add, mul
from .triangle import coeff_neg, coeff_pos

MULTINOMIAL_WARN_ABS_N = 150


@lru_cache(maxsize=4096)
def _fact(m: int) -> int:
    return 1 if m < 2 else m * _fact(m - 1)


def _bounded_compositions(total: int, top: int):
    """Yield tuples (j_1..j_top) with sum_i i*j_i == total, largest part first."""
    if top == 1:
        yield (total,)
        return
    for jt in range(total // top, -1, -1):
        for head in _bounded_compositions(total - top * jt, top - 1):
            yield head + (jt,)


def multinomial_neg(n: int, k: int) -> IntPoly:
    """F_{n,k}, n <= 0, as the signed multinomial sum over j_1 + 2j_2 + ... + kj_k = |n|+1-k.

    Each composition contributes (-1)^{J - j_k} J!/(j_1!...j_k!) x^{|n|+1-k(1+j_k)}.
    """
    check_k(k)
    if n > 0:
        raise ValueError("multinomial_neg needs n <= 0")
    if -n > MULTINOMIAL_WARN_ABS_N:
        warnings.warn(f"multinomial sum at |n|={-n} enumerates very many compositions",
                      RuntimeWarning, stacklevel=2)
    total = -n + 1 - k
    if total < 0:
        return ZERO
    terms: dict[int, int] = {}
    for js in _bounded_compositions(total, k):
        J = sum(js)
        den = 1
        for j in js:
            den *= _fact(j)
        c = _fact(J) // den
        if (J - js[-1]) & 1:
            c = -c
        e = total - k * js[-1]
        terms[e] = terms.get(e, 0) + c
    return IntPoly(terms)


def genfun_series_neg(k: int, order: int) -> list[IntPoly]:
    """Coefficients of w^0..w^order in w^{k-1}(1-xw) / (1 - (1+x^k-xw) w^k).

    Expanded as w^{k-1}(1-xw) * sum_s w^{ks} B^s with B = 1 + x^k - xw, working
    with polynomials in w whose coefficients are IntPoly.
    """
    check_k(k)
    if order < 0:
        raise ValueError("order must be >= 0")
    x = IntPoly({1: 1})
    B = [IntPoly({0: 1, k: 1}), -x]          # 1 + x^k - x w
    prefac = [IntPoly({0: 1}), -x]           # 1 - x w
    out = [ZERO] * (order + 1)
    power = [IntPoly({0: 1})]                # B^s, truncated
    s = 0
    while k - 1 + k * s <= order:
        base = k - 1 + k * s
        for i, pc in enumerate(prefac):
            for t, bc in enumerate(power):
                w = base + i + t
                if w > order:
                    break
                out[w] = add(out[w], mul(pc, bc))
        # B^{s+1}, truncated to what can still reach w^order
        limit = order - (k - 1) - k * (s + 1)
        if limit < 0:
            break
        nxt = [ZERO] * min(len(power) + 1, limit + 1)
        for t, pcoef in enumerate(power):
            for u, bcoef in enumerate(B):
                if t + u <= limit:
                    nxt[t + u] = add(nxt[t + u], mul(pcoef, bcoef))
        power = nxt
        s += 1
    return out


@dataclass(frozen=True)
class SymmetricSpec:
    """Elementary symmetric polynomials sigma_1..sigma_N of the xi-roots of P_{n,k}."""

    n: int
    k: int
    N: int
    sigma: tuple[Fraction, ...]

    @property
    def root_sum(self) -> Fraction:
        return self.sigma[0] if self.N else Fraction(0)

    @property
    def root_product(self) -> Fraction:
        return self.sigma[-1] if self.N else Fraction(1)


def sigma_pos(n: int, k: int) -> SymmetricSpec:
    """sigma_h = (-1)^h C_k(n-h-1, h) for the monic P_{n,k}, n >= 3."""
    check_k(k)
    if n < 3:
        raise ValueError("sigma_pos needs n >= 3")
    N = (k - 1) * (n - 1) // k
    sig = tuple(Fraction((-1) ** h * coeff_pos(k, n - h - 1, h)) for h in range(1, N + 1))
    return SymmetricSpec(n, k, N, sig)


def sigma_neg(n: int, k: int) -> SymmetricSpec:
    """sigma_h for n <= 0 from the negative triangle rows, normalized by the
    leading coefficient (-1)^r binom(q-1, r-1) when r >= 1."""
    prof = profile(n, k)
    if n > 0:
        raise ValueError("sigma_neg needs n <= 0")
    if prof.vanishes:
        raise VanishingIndex(n, k)
    q, r = prof.q, prof.r
    N = prof.degree // k
    m = -n + 1
    sig = []
    for h in range(1, N + 1):
        if r == 0:
            sig.append(Fraction((-1) ** h * coeff_neg(k, -(h + 1), m - k * (h + 1))))
        else:
            c = coeff_neg(k, -(h + r), m - k * (h + r))
            sig.append(Fraction((-1) ** (h + r) * c, binom(q - 1, r - 1)))
    return SymmetricSpec(n, k, N, tuple(sig))


def sigma(n: int, k: int) -> SymmetricSpec:
    return sigma_pos(n, k) if n >= 3 else sigma_neg(n, k) if n <= 0 else _sigma_trivial(n, k)


def _sigma_trivial(n: int, k: int) -> SymmetricSpec:
    # F_1 = 1 and F_2 = x^{k-1} have no nonzero roots
    return SymmetricSpec(n, k, 0, ())


def root_sum(n: int, k: int) -> Fraction:
    """Closed-form sum of the xi-roots of P_{n,k}."""
    check_k(k)
    if n > 0:
        return Fraction(-(n - 2)) if n >= 3 else Fraction(0)
    q, r = quotient_remainder(n, k)
    if q < r:
        raise VanishingIndex(n, k)
    if profile(n, k).degree < k:
        return Fraction(0)   # no nonzero roots; the closed forms assume N >= 1
    if r == 0:
        return Fraction(-(2 * q - 3) if k == 2 else -(q - 1))
    return Fraction(-(r + 1) * (q - r), r)


def root_product(n: int, k: int) -> Fraction:
    """Closed-form product of the xi-roots of P_{n,k}."""
    check_k(k)
    prof = profile(n, k)
    if prof.vanishes:
        raise VanishingIndex(n, k)
    N = prof.degree // k
    q, r = prof.q, prof.r
    if n > 0:
        return Fraction((-1) ** N * binom(q + r, r)) if n >= 3 else Fraction(1)
    if r == 0:
        return Fraction((-1) ** N)
    return Fraction((-1) ** N * q, r)


def vieta_sigma(xi_poly: IntPoly) -> tuple[Fraction, ...]:
    """sigma_h = (-1)^h c_{N-h} / c_N read off an exact polynomial in xi."""
    if not xi_poly:
        raise ValueError("zero polynomial")
    cN, N = xi_poly.leading_term()
    return tuple(Fraction((-1) ** h * xi_poly.coeff(N - h), cN) for h in range(1, N + 1))
