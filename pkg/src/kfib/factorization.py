"""Structural factorization F_{n,k} = x^r (x^k + 1)^rho Q(x^k), checked exactly."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange, NotDivisible, StructureViolation, VanishingIndex
from .indexing import check_k, profile
from .polycore import IntPoly, are_coprime, derivative, divide_exact, render_compact
from .recurrence import fib_poly

XI_PLUS_ONE = IntPoly({0: 1, 1: 1})
ONE_MINUS_XI = IntPoly({0: 1, 1: -1})


@dataclass(frozen=True)
class Factorization:
    n: int
    k: int
    r: int
    rho: int
    Q_xi: IntPoly       # polynomial in xi = x^k

    def expand(self) -> IntPoly:
        k = self.k
        return ((XI_PLUS_ONE ** self.rho) * self.Q_xi).substitute_power(k).shift(self.r)

    @property
    def P_xi(self) -> IntPoly:
        """P_{n,k}(xi) = (xi + 1)^rho Q(xi)."""
        return (XI_PLUS_ONE ** self.rho) * self.Q_xi

    def render(self, sep: str = "") -> str:
        """Factored text, e.g. ``2x^2(1+x^3)^2(5+2x^3)``."""
        return render_factored(self, sep)


def _xi_divisions(p: IntPoly) -> tuple[int, IntPoly]:
    """How many times (xi + 1) divides p, and the cofactor."""
    count = 0
    while True:
        # cheap necessary test: p(-1) == 0
        if p(-1) != 0:
            return count, p
        try:
            p = divide_exact(p, XI_PLUS_ONE)
        except NotDivisible:  # pragma: no cover - p(-1) == 0 guarantees divisibility
            return count, p
        count += 1


def factorize(n: int, k: int, poly: IntPoly | None = None) -> Factorization:
    """Measure r and rho by exact division and compare with the index formulas.

    Raises StructureViolation when an exponent is not r mod k or when the
    measured (x^k+1) multiplicity differs from the predicted rho.
    """
    prof = profile(n, k)
    if prof.vanishes:
        raise VanishingIndex(n, k)
    F = fib_poly(n, k) if poly is None else poly
    r = F.valuation
    if r != prof.r:
        raise StructureViolation(f"(n={n}, k={k}): lowest exponent {r}, expected r={prof.r}")
    try:
        P = F.compress(k, r)
    except ValueError as exc:
        raise StructureViolation(f"(n={n}, k={k}): {exc}") from None
    measured, Q = _xi_divisions(P)
    if measured != prof.rho:
        raise StructureViolation(
            f"(n={n}, k={k}): (x^k+1) divides {measured} times, formula gives rho={prof.rho}")
    return Factorization(n, k, r, measured, Q)


def is_squarefree_away_from_special(fac: Factorization) -> bool:
    """Whether gcd(F, F') is supported on x and x^k + 1 only.

    F = x^r (x^k+1)^rho Q(x^k) with Q(0) != 0 and (xi+1) not dividing Q, so
    this holds exactly when Q(x^k) is squarefree, i.e. when gcd(Q, Q') = 1
    in xi.
    """
    Q = fac.Q_xi
    if Q.degree == 0:
        return True
    return are_coprime(Q, derivative(Q))


def closed_form_small(n: int, k: int) -> IntPoly:
    """x^{k+1-n} (x^k + 1)^{n-2} for 2 <= n <= k + 1."""
    check_k(k)
    if not 2 <= n <= k + 1:
        raise IndexOutOfRange(f"closed form needs 2 <= n <= k+1, got n={n}, k={k}")
    return (IntPoly({0: 1, k: 1}) ** (n - 2)).shift(k + 1 - n)


def xks_family(k: int, s: int) -> IntPoly:
    """-x (x^k + 1)^{s-2} (x^k + s)."""
    return -(IntPoly({0: 1, k: 1}) ** (s - 2) * IntPoly({0: s, k: 1})).shift(1)


def check_xks_family(k: int, s: int) -> bool:
    """Whether F_{-sk,k} equals -x (x^k+1)^{s-2} (x^k+s) exactly."""
    check_k(k)
    if s < 2:
        raise IndexOutOfRange("s must be >= 2")
    return fib_poly(-s * k, k) == xks_family(k, s)


def period_shift_identity(n: int, k: int) -> bool:
    """Whether x^{k+1} F_{n+k+1} == F_n modulo x^k + 1."""
    for m in (n, n + k + 1):
        if profile(m, k).vanishes:
            raise VanishingIndex(m, k)
    lhs = fib_poly(n + k + 1, k).shift(k + 1) - fib_poly(n, k)
    return not lhs.reduce_mod_xk_plus_1(k)


def scan_vanishing_coefficients(k: int, n_min: int, n_max: int) -> list[tuple[int, tuple[int, ...]]]:
    """Nonvanishing F_{n,k}, n in [n_min, n_max] (both <= 0), with interior gaps.

    A gap is an exponent e = r + jk strictly between the lowest and highest
    exponents whose coefficient is zero. Exponents are reported after removing
    the x^r prefactor, i.e. as powers of x in P_{n,k}(x^k).
    """
    check_k(k)
    if not n_min <= n_max <= 0:
        raise ValueError("need n_min <= n_max <= 0")
    found = []
    for n in range(n_max, n_min - 1, -1):
        F = fib_poly(n, k)
        if not F:
            continue
        lo, hi = F.valuation, F.degree
        gaps = tuple(e - lo for e in range(lo + k, hi, k) if not F.coeff(e))
        if gaps:
            found.append((n, gaps))
    return sorted(found, reverse=True)


def _factor_text(p: IntPoly) -> str:
    return render_compact(p).replace(" ", "")


def _one_minus_xi_divisions(p: IntPoly) -> tuple[int, IntPoly]:
    count = 0
    while p.degree and p(1) == 0:
        p = divide_exact(p, ONE_MINUS_XI)
        count += 1
    return count, p


def render_factored(fac: Factorization, sep: str = "") -> str:
    """Factored text: sign and content, x^r, (1+x^k)^rho, (1-x^k)^mu, rest.

    The (1 - x^k) factor appears exactly when F(1) = 0.
    """
    k = fac.k
    mu, Q = _one_minus_xi_divisions(fac.Q_xi)
    content = Q.content()
    if Q.lowest_term()[0] < 0:
        content = -content
    Qx = IntPoly({e * k: c // content for e, c in Q.items()})
    parts = []
    if fac.r:
        parts.append("x" if fac.r == 1 else f"x^{fac.r}")
    for base, power in ((f"(1+x^{k})", fac.rho), (f"(1-x^{k})", mu)):
        if power:
            parts.append(base + (f"^{power}" if power > 1 else ""))
    if Qx != 1:
        parts.append(f"({_factor_text(Qx)})" if parts or abs(content) != 1 else _factor_text(Qx))
    if not parts:
        return str(content)
    text = sep.join(parts)
    if abs(content) != 1:
        if text.startswith("(") or text.startswith("x"):
            text = f"{abs(content)}{sep}{text}"
        else:
            text = f"{abs(content)}({text})"
    return ("-" if content < 0 else "") + text
