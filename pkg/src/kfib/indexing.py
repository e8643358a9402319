"""Index arithmetic: quotient/remainder, rho, vanishing set, degrees and
closed-form extreme terms of F_{n,k}."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import KTooSmall, MonomialIndex, VanishingIndex


def check_k(k: int) -> None:
    if k < 2:
        raise KTooSmall(k)


def binom(n: int, m: int) -> int:
    """Binomial coefficient that is zero outside 0 <= m <= n."""
    if m < 0 or n < 0 or m > n:
        return 0
    return comb(n, m)


def quotient_remainder(n: int, k: int) -> tuple[int, int]:
    """(q, r) with k*q + r = |n| + 1 for n <= 0 and k*(q+1) - r = n - 1 for n >= 2.

    At n = 1 the floor formula would give q = -1; q is clamped to 0 there.
    """
    check_k(k)
    if n > 0:
        return max((n - 2) // k, 0), ((k - 1) * (n - 1)) % k
    return (1 - n) // k, (1 - n) % k


def rho(n: int, k: int) -> int:
    """Multiplicity of the (x^k + 1) factor; periodic in n with period k + 1."""
    check_k(k)
    if n > 0:
        return ((n - 2) % (k + 1)) % k
    return ((k * -n - 2) % (k + 1)) % k


def is_vanishing(n: int, k: int) -> bool:
    if n > 0:
        return False
    q, r = quotient_remainder(n, k)
    return q < r


def degree(n: int, k: int) -> int | None:
    """Degree of F_{n,k}; ``None`` at identically vanishing indices."""
    check_k(k)
    if n > 0:
        return (k - 1) * (n - 1)
    q, r = quotient_remainder(n, k)
    if q < r:
        return None
    m = 1 - n
    return m - k if r == 0 else m - k * r


@dataclass(frozen=True)
class IndexProfile:
    n: int
    k: int
    q: int
    r: int
    rho: int
    vanishes: bool
    degree: int | None

    @property
    def xi_degree(self) -> int | None:
        """Degree of P_{n,k} in xi = x^k, i.e. the number of nonzero xi-roots."""
        return None if self.degree is None else self.degree // self.k

    def as_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k, "q": self.q, "r": self.r, "rho": self.rho,
            "vanishes": self.vanishes, "degree": self.degree,
        }


def profile(n: int, k: int) -> IndexProfile:
    check_k(k)
    q, r = quotient_remainder(n, k)
    van = n <= 0 and q < r
    return IndexProfile(n, k, q, r, rho(n, k), van, None if van else degree(n, k))


def vanishing_indices(k: int) -> list[tuple[int, int]]:
    """Blocks of identically vanishing indices as inclusive (hi, lo) pairs of n.

    Block s covers |n| in [s(k+1), (s+1)k - 2] for s = 0..k-2, so each tuple is
    (-s(k+1), -((s+1)k - 2)).
    """
    check_k(k)
    return [(-s * (k + 1), -((s + 1) * k - 2)) for s in range(k - 1)]


def vanishing_set(k: int) -> list[int]:
    return [n for hi, lo in vanishing_indices(k) for n in range(hi, lo - 1, -1)]


def lowest_term(n: int, k: int) -> tuple[int, int]:
    """(coefficient, exponent) of the lowest nonzero term of F_{n,k}."""
    check_k(k)
    if n == 1:
        return 1, 0
    if n == 2:
        return 1, k - 1
    q, r = quotient_remainder(n, k)
    if n > 0:
        return binom(q + r, r), r
    if q < r:
        raise VanishingIndex(n, k)
    return (-1) ** r * binom(q, r), r


def highest_term(n: int, k: int) -> tuple[int, int]:
    """(coefficient, exponent) of the leading term of F_{n,k}."""
    check_k(k)
    if n > 0:
        return 1, (k - 1) * (n - 1)
    q, r = quotient_remainder(n, k)
    if q < r:
        raise VanishingIndex(n, k)
    m = 1 - n
    if r == 0:
        return 1, m - k
    return (-1) ** r * binom(q - 1, r - 1), m - k * r


def is_monomial(n: int, k: int) -> bool:
    """Whether the nonvanishing F_{n,k} is a single term."""
    if n > 0:
        return n <= 2
    q, r = quotient_remainder(n, k)
    m = -n
    if r == 0:
        return m < 2 * k - 1
    return m < k * (r + 1) - 1


def second_highest_term(n: int, k: int) -> tuple[int, int]:
    """(coefficient, exponent) of the second-highest term of F_{n,k}.

    The exponent sits k below the leading exponent. For n <= 0 the coefficient
    is the k-nomial triangle entry at row -(1 + j) with j = 1 (r = 0) or j = r
    (r >= 1); for n >= 3 it is C_k(n-2, 1) = n - 2.
    """
    check_k(k)
    if n > 0:
        if n <= 2:
            raise MonomialIndex(n, k)
        return n - 2, (k - 1) * (n - 1) - k
    q, r = quotient_remainder(n, k)
    if q < r:
        raise VanishingIndex(n, k)
    if is_monomial(n, k):
        raise MonomialIndex(n, k)
    m = 1 - n
    if r == 0:
        c = 2 * q - 3 if k == 2 else q - 1
        return c, m - 2 * k
    return (-1) ** r * (r + 1) * binom(q - 1, r), m - k * (r + 1)
