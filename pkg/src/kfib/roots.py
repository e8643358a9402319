"""Floating-point root analysis of P_{n,k}(xi), xi = x^k.

The exactly known factors x^r and (xi + 1)^rho are removed before any
numerics, so the iteration only ever sees the squarefree cofactor Q(xi).
Roots of Q are found by Aberth-Ehrlich simultaneous iteration started from
the Newton polygon of the integer coefficients.
"""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import ConvergenceFailure, VanishingIndex
from .factorization import factorize
from .indexing import check_k, profile
from .polycore import IntPoly

DEFAULT_TOL = 1e-9
INTERVAL_GUARD = 1e-7
_EPS = np.finfo(float).eps
_TINY = 1e-300
_MAX_ITER = 600


# -- numerics ---------------------------------------------------------------

def normalized_coeffs(p: IntPoly) -> np.ndarray:
    """Dense ascending float coefficients of p divided by max |c|.

    Integer true division is correctly rounded, so huge coefficients never
    pass through an overflowing float.
    """
    big = max(abs(c) for c in p.terms.values())
    return np.array([c / big for c in p.dense()], dtype=float)


def _newton_polygon_start(p: IntPoly, sigma: float = 0.7) -> np.ndarray:
    """Starting points on circles whose radii come from the upper convex hull
    of (i, log|c_i|)."""
    pts = [(e, math.log(abs(c))) for e, c in p.items()]
    hull: list[tuple[int, float]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] unless it lies strictly above the chord
            if (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1) >= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    N = p.degree
    z = []
    for (i, li), (j, lj) in zip(hull, hull[1:]):
        m = j - i
        u = math.exp((li - lj) / m)
        for t in range(m):
            z.append(u * cmath.exp(1j * (2 * math.pi * t / m + 2 * math.pi * i / N + sigma)))
    return np.array(z, dtype=complex)


def _log_abs_sum(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    """log of sum_i |c_i| |z|^i for ascending c, without overflow."""
    N = len(c) - 1
    a = np.abs(z)
    ac = np.abs(c)
    out = np.empty(a.shape, dtype=float)
    inside = a <= 1.0
    ai = a[inside]
    s = np.full(ai.shape, ac[-1])
    for b in ac[-2::-1]:
        s = s * ai + b
    out[inside] = np.log(s)
    ao = a[~inside]
    w = 1.0 / ao
    s = np.full(ao.shape, ac[0])
    for b in ac[1:]:
        s = s * w + b
    out[~inside] = np.log(s) + N * np.log(ao)
    return out


def fib_values(n: int, k: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """F_{n,k}(x) and F'_{n,k}(x) by running the recurrence in floating point.

    Returns (f, df, log_scale) with true values f * exp(log_scale) and
    df * exp(log_scale). The window is renormalized as it grows. Running the
    recurrence is far better conditioned than Horner on expanded
    coefficients, whose roots cluster (k = 2 is Chebyshev-like).
    """
    x = np.asarray(x, dtype=complex)
    one, zero = np.ones_like(x), np.zeros_like(x)
    logs = np.zeros(x.shape, dtype=float)
    if n >= 1:
        # W[j] = F_{m-1-j}; F_m = sum_j x^{k-1-j} W[j]
        W = [one] + [zero] * (k - 1)
        steps = n - 1
    else:
        # W[j] = F_{m+1+j}; F_m = W[k-1] - x (W[0] + x (W[1] + ... + x W[k-2]))
        W = [zero] * (k - 1) + [one]
        if n > 1 - k:
            return zero, zero, logs      # seed block: F vanishes there
        steps = (1 - k) - n + 1
    D = [zero] * k
    for _ in range(steps):
        if n >= 1:
            f, d = W[0], D[0]
            for j in range(1, k):
                d = d * x + f + D[j]
                f = f * x + W[j]
        else:
            g, dg = W[k - 2], D[k - 2]
            for j in range(k - 3, -1, -1):
                dg = dg * x + g + D[j]
                g = g * x + W[j]
            f = W[k - 1] - g * x
            d = D[k - 1] - (dg * x + g)
        W = [f] + W[:-1]
        D = [d] + D[:-1]
        mag = np.maximum(np.abs(f), np.abs(d))
        off = (mag > 1e100) | ((mag < 1e-100) & (mag > 0))
        if off.any():
            s = np.where(off, mag, 1.0)
            W = [v / s for v in W]
            D = [v / s for v in D]
            logs += np.log(s)
    return W[0], D[0], logs


_MATRIX_MIN_STEPS = 48


def _renorm(A, dA, logs):
    s = np.maximum(np.abs(A).max(axis=(1, 2)), np.abs(dA).max(axis=(1, 2)))
    s = np.where(s > 0, s, 1.0)
    return A / s[:, None, None], dA / s[:, None, None], logs + np.log(s)


def fib_values_matrix(n: int, k: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Same contract as ``fib_values``, via binary powers of the k x k transfer
    matrix carried together with its derivative: O(log n) batched products."""
    x = np.asarray(x, dtype=complex)
    N = x.size
    T = np.zeros((N, k, k), dtype=complex)
    dT = np.zeros_like(T)
    for i in range(1, k):
        T[:, i, i - 1] = 1
    if n >= 1:
        # (F_m, ..., F_{m-k+1}) -> (F_{m+1}, ..., F_{m-k+2})
        for j in range(k):
            e = k - 1 - j
            T[:, 0, j] = x ** e
            if e:
                dT[:, 0, j] = e * x ** (e - 1)
        power, col = n - 1, 0
    else:
        # (F_m, ..., F_{m+k-1}) -> (F_{m-1}, ..., F_{m+k-2})
        for j in range(1, k):
            T[:, 0, j - 1] = -x ** j
            dT[:, 0, j - 1] = -j * x ** (j - 1)
        T[:, 0, k - 1] = 1
        power, col = (2 - k) - n, k - 1
    R = np.broadcast_to(np.eye(k, dtype=complex), (N, k, k)).copy()
    dR = np.zeros_like(R)
    logs = np.zeros(N)
    A, dA, la = T, dT, np.zeros(N)
    while power:
        if power & 1:
            R, dR = R @ A, dR @ A + R @ dA
            R, dR, logs = _renorm(R, dR, logs + la)
        power >>= 1
        if power:
            A, dA = A @ A, dA @ A + A @ dA
            A, dA, la = _renorm(A, dA, 2 * la)
    return R[:, 0, col], dR[:, 0, col], logs


class _Target:
    """Newton ratio and backward error for the deflated cofactor of F_{n,k}.

    In xi mode the unknown is xi and the cofactor is Q(xi); in x mode the
    unknown is x and the cofactor is Q(x^k). Values come from the
    recurrence, with x^r and (x^k + 1)^rho divided out analytically.
    """

    def __init__(self, n: int, k: int, r: int, rho: int, cofactor: IntPoly, in_x: bool):
        self.n, self.k, self.r, self.rho, self.in_x = n, k, r, rho, in_x
        self.c = normalized_coeffs(cofactor)
        self.log_big = math.log(max(abs(v) for v in cofactor.terms.values()))

    def __call__(self, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        k, r, rho = self.k, self.r, self.rho
        if self.in_x:
            x, xk = z, z ** k
        else:
            x, xk = z ** (1.0 / k), z
        steps = self.n - 1 if self.n >= 1 else -self.n
        evaluate = fib_values_matrix if steps >= _MATRIX_MIN_STEPS else fib_values
        f, df, logs = evaluate(self.n, k, x)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            dlog = df / f - r / x                       # d/dx log(F / x^r)
            if self.in_x:
                dlog = dlog - rho * k * x ** (k - 1) / (xk + 1)
            else:
                dlog = dlog / (k * x ** (k - 1)) - rho / (xk + 1)
            ratio = 1.0 / dlog
            log_val = (np.log(np.abs(f)) + logs - r * np.log(np.abs(x))
                       - rho * np.log(np.abs(xk + 1)))
            err = np.exp(log_val - self.log_big - _log_abs_sum(self.c, z))
        return ratio, np.nan_to_num(err, nan=np.inf)


def aberth(target, z0: np.ndarray, max_iter: int = _MAX_ITER) -> tuple[np.ndarray, float, float]:
    """Aberth-Ehrlich iteration; ``target(z)`` returns (f/f', backward error).

    A root is frozen once its correction reaches rounding level, or stalls
    (stops shrinking) below 1e-12 relative. Returns the roots, the largest
    backward error, and the largest relative size of one more correction.
    """
    z = np.asarray(z0, dtype=complex).copy()
    N = len(z)
    active = np.ones(N, dtype=bool)
    prev = np.full(N, np.inf)
    for _ in range(max_iter):
        idx = np.nonzero(active)[0]
        if not idx.size:
            break
        ratio, _ = target(z[idx])
        corr = _aberth_step(z, idx, ratio)
        z[idx] -= corr
        step = np.abs(corr) / np.maximum(np.abs(z[idx]), _TINY)
        done = (step <= 4 * _EPS) | ((step <= 1e-12) & (step > 0.5 * prev[idx]))
        prev[idx] = step
        active[idx[done]] = False
    idx = np.arange(N)
    ratio, err = target(z)
    step = np.abs(_aberth_step(z, idx, ratio)) / np.maximum(np.abs(z), _TINY)
    if not N:
        return z, 0.0, 0.0
    return z, float(err.max()), float(step.max())


def _aberth_step(z: np.ndarray, idx: np.ndarray, ratio: np.ndarray) -> np.ndarray:
    diff = z[idx, None] - z[None, :]
    diff[np.arange(idx.size), idx] = np.inf
    S = (1.0 / diff).sum(axis=1)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        corr = ratio / (1.0 - ratio * S)
    corr[~np.isfinite(corr)] = 0.0
    return corr


def _solve_target(target, p: IntPoly, tol: float, label: tuple[int, int],
                  start: np.ndarray | None = None) -> tuple[np.ndarray, float]:
    N = p.degree or 0
    if N == 0:
        return np.empty(0, dtype=complex), 0.0
    if N == 1:
        return np.array([-p.coeff(0) / p.coeff(1)], dtype=complex), 0.0
    z = res = step = None
    if start is not None:
        z, res, step = aberth(target, _fit_start(start, N), max_iter=60)
    if z is None or not (res <= tol and step <= tol):
        z, res, step = aberth(target, _newton_polygon_start(p))
    if not (res <= tol and step <= tol):
        # companion-matrix eigenvalues as a second starting guess
        try:
            z2, res2, step2 = aberth(target, np.roots(normalized_coeffs(p)[::-1]))
        except np.linalg.LinAlgError:
            z2, res2, step2 = z, res, step
        if max(res2, step2) < max(res, step) or not np.isfinite(max(res, step)):
            z, res, step = z2, res2, step2
    if not (res <= tol and step <= tol):
        raise ConvergenceFailure(*label, max(res, step))
    return z, res


def _fit_start(prev: np.ndarray, N: int) -> np.ndarray:
    """Adapt the roots of a neighbouring index to N starting points.

    Surplus points nearest -1 are dropped (those are the ones absorbed into
    the (xi+1)^rho factor); missing ones go on a circle just outside.
    """
    prev = np.asarray(prev, dtype=complex)
    if len(prev) > N:
        keep = np.argsort(-np.abs(prev + 1), kind="stable")[:N]
        return prev[np.sort(keep)]
    extra = N - len(prev)
    if not extra:
        return prev.copy()
    rad = 1.05 * max(1.0, float(np.abs(prev).max(initial=0.0)))
    ring = rad * np.exp(1j * (2 * np.pi * (np.arange(extra) + 0.5) / extra + 0.3))
    return np.concatenate([prev, ring])


def solve_cofactor(n: int, k: int, tol: float = DEFAULT_TOL, in_x: bool = False,
                   start: np.ndarray | None = None) -> tuple[np.ndarray, float]:
    """Roots of the squarefree cofactor Q of F_{n,k}, in xi or in x.

    ``start`` optionally seeds the iteration (e.g. with the roots of a
    neighbouring index); a cold start is used if that does not converge.
    """
    fac = factorize(n, k)
    p = fac.Q_xi.substitute_power(k) if in_x else fac.Q_xi
    target = _Target(n, k, fac.r, fac.rho, p, in_x)
    return _solve_target(target, p, tol, (n, k), start)


# -- reports ----------------------------------------------------------------

def _real_x_from_xi(xi: Sequence[complex], k: int, tol: float) -> list[float]:
    xs = []
    for z in xi:
        if abs(z.imag) > tol * (1 + abs(z.real)):
            continue
        v = z.real
        if k % 2:
            xs.append(math.copysign(abs(v) ** (1.0 / k), v))
        elif v > 0:
            t = v ** (1.0 / k)
            xs.extend((-t, t))
    return sorted(xs)


@dataclass(frozen=True)
class RootReport:
    n: int
    k: int
    xi_roots: tuple[complex, ...]
    zeta: float
    x_real_roots: tuple[float, ...]
    residual: float
    r: int = 0
    rho: int = 0

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "xi_roots": [[z.real, z.imag] for z in self.xi_roots],
            "zeta": self.zeta,
            "x_real_roots": list(self.x_real_roots),
            "residual": self.residual,
        }

    def x_roots(self, include_zero: bool = True) -> list[complex]:
        """Every x-root: the k-th roots of each xi-root, plus x = 0 r times."""
        k = self.k
        out = [0j] * self.r if include_zero else []
        for z in self.xi_roots:
            mod = abs(z) ** (1.0 / k)
            arg = cmath.phase(z)
            out.extend(cmath.rect(mod, (arg + 2 * math.pi * t) / k) for t in range(k))
        return out


_REPORTS: dict[tuple[int, int, float], RootReport] = {}
_REPORTS_MAX = 50_000


def find_roots(n: int, k: int, tol: float = DEFAULT_TOL) -> RootReport:
    """Roots of P_{n,k}(xi) with the (xi + 1)^rho factor taken out exactly."""
    rep = _REPORTS.get((n, k, tol))
    return rep if rep is not None else _report(n, k, tol)


def _report(n: int, k: int, tol: float, start: np.ndarray | None = None) -> RootReport:
    """Solve (optionally warm-started) and memoize the report."""
    key = (n, k, tol)
    if key in _REPORTS:
        return _REPORTS[key]
    rep = _solve_report(n, k, tol, start)
    if len(_REPORTS) >= _REPORTS_MAX:
        _REPORTS.clear()
    _REPORTS[key] = rep
    return rep


def _solve_report(n: int, k: int, tol: float, start: np.ndarray | None) -> RootReport:
    check_k(k)
    prof = profile(n, k)
    if prof.vanishes:
        raise VanishingIndex(n, k)
    fac = factorize(n, k)
    numeric, res = solve_cofactor(n, k, tol, start=start)
    xi = tuple([complex(-1.0)] * fac.rho + [complex(z) for z in numeric])
    zeta = max((abs(z) for z in xi), default=0.0)
    return RootReport(n, k, xi, zeta, tuple(_real_x_from_xi(xi, k, tol)), res, fac.r, fac.rho)


def numeric_clusters(report: RootReport, sep: float = 1e-6) -> list[tuple[complex, int]]:
    """Groups of numerically found xi-roots closer than sep (relative).

    The exactly deflated -1 roots are excluded; a nonempty result means
    the numerics see a repeated root of the squarefree cofactor.
    """
    z = np.array(report.xi_roots[report.rho:], dtype=complex)
    seen = np.zeros(len(z), dtype=bool)
    out = []
    for i in range(len(z)):
        if seen[i]:
            continue
        near = np.abs(z - z[i]) <= sep * max(1.0, abs(z[i]))
        near &= ~seen
        if near.sum() > 1:
            out.append((complex(z[i]), int(near.sum())))
        seen |= near
    return out


# -- real roots ---------------------------------------------------------------

@dataclass(frozen=True)
class RealRootClassification:
    n: int
    k: int
    x_real_roots: tuple[float, ...]
    claim: str
    holds: bool
    violations: tuple[float, ...] = ()


def real_roots_classify(n: int, k: int, tol: float = DEFAULT_TOL) -> RealRootClassification:
    """Real nonzero x-roots with the sign-rule claim that applies to (n, k).

    even k: no nonzero real roots; odd k and n > 0: every real root lies in
    [-1, 0]; odd k and n <= 0: no real root in the open interval (-1, 0).
    Violations are reported, not raised.
    """
    rep = find_roots(n, k, tol)
    xs = rep.x_real_roots
    g = INTERVAL_GUARD
    if k % 2 == 0:
        claim, bad = "no nonzero real roots", xs
    elif n > 0:
        claim = "real roots in [-1, 0]"
        bad = tuple(x for x in xs if x < -1 - g or x > g)
    else:
        claim = "no real roots in (-1, 0)"
        bad = tuple(x for x in xs if -1 + g < x < -g)
    return RealRootClassification(n, k, xs, claim, not bad, tuple(bad))


# -- zeta sweeps ----------------------------------------------------------------

@dataclass(frozen=True)
class ZetaRow:
    n: int
    k: int
    r: int
    zeta: float
    error: str | None = None


def zeta_row(n: int, k: int, tol: float = DEFAULT_TOL) -> ZetaRow:
    return _zeta_chain((k, tol, (n,)))[0]


def _zeta_chain(args: tuple[int, float, tuple[int, ...]]) -> list[ZetaRow]:
    """zeta along n, n -+ k, n -+ 2k, ...; each solve starts from the last roots."""
    k, tol, ns = args
    out = []
    prev = None
    for n in ns:
        prof = profile(n, k)
        if prof.vanishes:
            out.append(ZetaRow(n, k, prof.r, 0.0))
            continue
        try:
            rep = _report(n, k, tol, prev)
        except ConvergenceFailure as exc:
            out.append(ZetaRow(n, k, prof.r, math.nan, str(exc)))
            continue
        prev = np.array(rep.xi_roots[rep.rho:], dtype=complex)
        out.append(ZetaRow(n, k, prof.r, rep.zeta))
    return out


def parallel_map(fn, items: list, jobs: int = 1) -> list:
    """Ordered map, fanned out to worker processes when jobs > 1."""
    if jobs <= 1 or len(items) < 2:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def zeta_sweep(k: int, n_range: Iterable[int], tol: float = DEFAULT_TOL, jobs: int = 1) -> list[ZetaRow]:
    """zeta_{n,k} for each n, sorted by n. Failures are kept as NaN rows.

    Indices are grouped into chains of equal sign and equal n mod k (which
    fixes r), walked outward from 0 so each solve is warm-started from its
    neighbour. Chains are independent and are the unit of parallel work.
    """
    check_k(k)
    ns = sorted(set(n_range))
    chains: dict[tuple[bool, int], list[int]] = {}
    for n in sorted(ns, key=abs):
        chains.setdefault((n > 0, n % k), []).append(n)
    jobs_args = [(k, tol, tuple(chain)) for _, chain in sorted(chains.items())]
    rows = [row for chunk in parallel_map(_zeta_chain, jobs_args, jobs) for row in chunk]
    return sorted(rows, key=lambda row: row.n)


def zeta_csv(rows: Iterable[ZetaRow]) -> str:
    lines = ["n,zeta,r"]
    lines += [f"{row.n},{row.zeta:.12g},{row.r}" for row in rows]
    return "\n".join(lines) + "\n"


@dataclass
class ZetaBoundCheck:
    k: int
    checked: int = 0
    bound_violations: list[tuple[int, float, int]] = field(default_factory=list)
    equality_violations: list[tuple[int, float, int]] = field(default_factory=list)
    failures: list[int] = field(default_factory=list)

    @property
    def bound_holds(self) -> bool:
        return not self.bound_violations and not self.failures

    @property
    def equality_holds(self) -> bool:
        return not self.equality_violations


def check_zeta_bound(rows: Iterable[ZetaRow], tol: float = 1e-6) -> ZetaBoundCheck:
    """zeta <= floor(|n|/k) + tol for n < 0, and equality whenever r = 1."""
    rows = list(rows)
    out = ZetaBoundCheck(rows[0].k if rows else 0)
    for row in rows:
        if row.n >= 0 or profile(row.n, row.k).vanishes:
            continue
        if row.error is not None:
            out.failures.append(row.n)
            continue
        out.checked += 1
        bound = -row.n // row.k
        if row.zeta > bound + tol:
            out.bound_violations.append((row.n, row.zeta, bound))
        if row.r == 1 and abs(row.zeta - bound) > tol:
            out.equality_violations.append((row.n, row.zeta, bound))
    return out


def branch_slopes(rows: Iterable[ZetaRow]) -> dict[int, float]:
    """Least-squares slope of zeta against |n| per remainder r >= 1, n < 0."""
    groups: dict[int, list[tuple[int, float]]] = {}
    for row in rows:
        if row.n < 0 and row.r >= 1 and row.zeta > 0 and math.isfinite(row.zeta):
            groups.setdefault(row.r, []).append((-row.n, row.zeta))
    out = {}
    for r in sorted(groups):
        pts = np.array(groups[r], dtype=float)
        if len(pts) >= 2:
            out[r] = float(np.polyfit(pts[:, 0], pts[:, 1], 1)[0])
    return out


def slopes_decreasing(slopes: dict[int, float]) -> bool:
    vals = [slopes[r] for r in sorted(slopes)]
    return all(a > b for a, b in zip(vals, vals[1:]))


@dataclass(frozen=True)
class Supremum:
    k: int
    n_max: int
    zeta_max: float
    argmax: int
    fit: float

    @property
    def fit_residual(self) -> float:
        return self.zeta_max - self.fit


def measured_supremum(k: int, n_max: int, tol: float = DEFAULT_TOL, jobs: int = 1) -> Supremum:
    """Largest zeta_{n,k} over 1 <= n <= n_max beside the 2.1 + 3.9/k fit."""
    rows = [r for r in zeta_sweep(k, range(1, n_max + 1), tol, jobs) if math.isfinite(r.zeta)]
    best = max(rows, key=lambda r: r.zeta)
    return Supremum(k, n_max, best.zeta, best.n, 2.1 + 3.9 / k)


# -- symmetry checks ------------------------------------------------------------

def _max_matched_distance(a: Sequence[complex], b: Sequence[complex]) -> float:
    """Largest relative distance under the optimal one-to-one matching."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        return math.inf
    if not a.size:
        return 0.0
    scale = np.maximum(1.0, np.abs(a))[:, None]
    D = np.abs(a[:, None] - b[None, :]) / scale
    rows, cols = linear_sum_assignment(D)
    return float(D[rows, cols].max())


def rotational_symmetry_check(n: int, k: int, tol: float = 1e-7) -> bool:
    """Whether the x-roots are invariant under x -> omega x, omega = e^{2 pi i/k}.

    Q(x^k) is solved directly as a polynomial in x (so nothing about the
    symmetry is assumed), then the rotated root set is matched back onto
    itself. The x^r and (x^k+1)^rho parts are exactly symmetric already.
    """
    check_k(k)
    if profile(n, k).vanishes:
        raise VanishingIndex(n, k)
    roots, _ = solve_cofactor(n, k, DEFAULT_TOL, in_x=True)
    omega = cmath.exp(2j * math.pi / k)
    return _max_matched_distance(roots * omega, roots) <= tol


def k2_root_formula_check(n: int, tol: float = DEFAULT_TOL) -> bool:
    """Whether the roots of F_{n,2} are exactly 2i cos(j pi/n), j = 1..n-1, all simple."""
    if n < 2:
        raise ValueError("need n >= 2")
    rep = find_roots(n, 2, tol)
    got = rep.x_roots()
    want = [2j * math.cos(j * math.pi / n) for j in range(1, n)]
    if len(got) != len(want) or _max_matched_distance(got, want) > tol:
        return False
    g = np.array(got)
    gaps = np.abs(g[:, None] - g[None, :])
    np.fill_diagonal(gaps, np.inf)
    return bool(len(g) < 2 or gaps.min() > tol)


def argand_rows(n: int, k: int, tol: float = DEFAULT_TOL) -> list[tuple[float, float]]:
    """(re, im) of every x-root of F_{n,k}, zero roots included."""
    rep = find_roots(n, k, tol)
    pts = rep.x_roots()
    return sorted((z.real, z.imag) for z in pts)


def argand_csv(rows: Iterable[tuple[float, float]]) -> str:
    lines = ["re,im"] + [f"{re:.12g},{im:.12g}" for re, im in rows]
    return "\n".join(lines) + "\n"
