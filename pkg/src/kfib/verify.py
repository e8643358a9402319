"""Cross-check suites behind ``kfib verify``.

Every suite takes a VerifyConfig and returns a SuiteResult listing how many
identities it checked and a record per failure. Suites are independent, so
they can run in worker processes; the report is assembled in a fixed order.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import closedform, factorization, indexing, roots, tables, triangle
from .errors import MonomialIndex
from .recurrence import fib_number, fib_poly, number_at_one


@dataclass(frozen=True)
class VerifyConfig:
    k_max: int = 6
    n_abs_max: int = 150
    tol: float = 1e-9
    suites: tuple[str, ...] = ()
    jobs: int = 1

    def __post_init__(self):
        if self.k_max < 2:
            raise ValueError("k_max must be >= 2")
        if self.n_abs_max < 1:
            raise ValueError("n_abs_max must be >= 1")
        if not self.tol > 0:
            raise ValueError("tol must be > 0")
        unknown = set(self.suites) - set(SUITES)
        if unknown:
            raise ValueError(f"unknown suites: {', '.join(sorted(unknown))}")


@dataclass(frozen=True)
class Failure:
    suite: str
    n: int | None
    k: int | None
    check: str
    expected: str
    got: str


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, n, k, what: str, expected, got) -> bool:
        self.checked += 1
        if not ok:
            self.failures.append(Failure(self.name, n, k, what, str(expected), str(got)))
        return ok


# the composition count of the multinomial sum grows exponentially in |n|;
# past this the oracle alone would exceed the default time budget
MULTINOMIAL_VERIFY_CAP = 100


def _ks(cfg: VerifyConfig):
    return range(2, cfg.k_max + 1)


def _nonvanishing(n: int, k: int) -> bool:
    return not indexing.is_vanishing(n, k)


# -- suites -------------------------------------------------------------------

def suite_vanishing(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("vanishing")
    for k in _ks(cfg):
        found = [n for n in range(0, -cfg.n_abs_max - 1, -1) if not fib_poly(n, k)]
        predicted = [n for n in range(0, -cfg.n_abs_max - 1, -1) if indexing.is_vanishing(n, k)]
        res.check(found == predicted, None, k, "zero set equals {q < r}", predicted, found)
        blocks = [n for n in indexing.vanishing_set(k) if n >= -cfg.n_abs_max]
        res.check(found == blocks, None, k, "block intervals", blocks, found)
        if cfg.n_abs_max >= k * k + 3 * k:
            res.check(len(found) == k * (k - 1) // 2, None, k, "cardinality", k * (k - 1) // 2, len(found))
        res.notes.append(f"k={k}: {len(found)} vanishing indices confirmed")
    return res


def suite_theorem1(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("theorem1")
    k = 3
    res.check(fib_number(-16, k) == 0, -16, k, "Tribonacci number T_-16", 0, fib_number(-16, k))
    T = fib_poly(-17, k)
    res.check(bool(T), -17, k, "T_-17(x) nonzero", "nonzero", T)
    res.check(T(1) == 0, -17, k, "T_-17(1)", 0, T(1))
    exps, coeffs = (0, 3, 6, 9, 12, 15), (1, -5, -6, 4, 5, 1)
    got = tuple(T.coeff(e) for e in exps)
    res.check(got == coeffs and tuple(T.exponents()) == exps, -17, k, "coefficients", coeffs, got)
    res.notes.append("T_-16 = 0 as a number while T_-17(x) is a nonzero polynomial vanishing at x = 1")
    return res


def suite_closedform(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("closedform")
    N = cfg.n_abs_max
    multi_cap = min(N, MULTINOMIAL_VERIFY_CAP)
    for k in _ks(cfg):
        series = closedform.genfun_series_neg(k, N)
        for n in range(0, -N - 1, -1):
            F = fib_poly(n, k)
            res.check(series[-n] == F, n, k, "generating function", F, series[-n])
            A = triangle.assemble_neg(k, n)
            res.check(A == F, n, k, "triangle diagonal", F, A)
            if -n <= multi_cap:
                M = closedform.multinomial_neg(n, k)
                res.check(M == F, n, k, "multinomial sum", F, M)
        for n in range(1, N + 1):
            F = fib_poly(n, k)
            A = triangle.assemble_pos(k, n)
            res.check(A == F, n, k, "binomial-sum assembly", F, A)
    if N > multi_cap:
        res.notes.append(f"multinomial sum checked for |n| <= {multi_cap} only")
    return res


def suite_terms(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("terms")
    N = cfg.n_abs_max
    for k in _ks(cfg):
        for n in range(-N, N + 1):
            if not _nonvanishing(n, k):
                continue
            F = fib_poly(n, k)
            res.check(indexing.degree(n, k) == F.degree, n, k, "degree", F.degree, indexing.degree(n, k))
            res.check(indexing.lowest_term(n, k) == F.lowest_term(), n, k, "lowest term",
                      F.lowest_term(), indexing.lowest_term(n, k))
            res.check(indexing.highest_term(n, k) == F.leading_term(), n, k, "highest term",
                      F.leading_term(), indexing.highest_term(n, k))
            exps = F.exponents()
            try:
                got = indexing.second_highest_term(n, k)
            except MonomialIndex:
                res.check(len(exps) == 1, n, k, "monomial", "single term", len(exps))
                continue
            e = F.degree - k
            res.check(got == (F.coeff(e), e), n, k, "second-highest term", (F.coeff(e), e), got)
    return res


def suite_factorization(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("factorization")
    N = cfg.n_abs_max
    for k in _ks(cfg):
        for n in range(-N, N + 1):
            if not _nonvanishing(n, k):
                continue
            try:
                fac = factorization.factorize(n, k)
            except Exception as exc:  # StructureViolation carries the detail
                res.check(False, n, k, "x^r (x^k+1)^rho Q(x^k)", "factorization", exc)
                continue
            res.check(fac.expand() == fib_poly(n, k), n, k, "reconstruction", "F", fac.render())
            res.check(factorization.is_squarefree_away_from_special(fac), n, k,
                      "gcd(F, F') on x and x^k+1 only", "coprime Q, Q'", "repeated factor")
        for n in range(2, k + 2):
            cf = factorization.closed_form_small(n, k)
            res.check(cf == fib_poly(n, k), n, k, "x^{k+1-n}(x^k+1)^{n-2}", cf, fib_poly(n, k))
        for n in range(-N, N + 1):
            if _nonvanishing(n, k) and _nonvanishing(n + k + 1, k):
                res.check(factorization.period_shift_identity(n, k), n, k,
                          "x^{k+1} F_{n+k+1} = F_n mod x^k+1", True, False)
    return res


def suite_sigma(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("sigma")
    N = cfg.n_abs_max
    for k in _ks(cfg):
        for n in range(-N, N + 1):
            if not _nonvanishing(n, k) or n in (1, 2):
                continue
            fac = factorization.factorize(n, k)
            P = fac.P_xi
            vieta = closedform.vieta_sigma(P)
            spec = closedform.sigma(n, k)
            res.check(spec.sigma == vieta, n, k, "sigma_h", vieta, spec.sigma)
            if not vieta:
                continue
            res.check(closedform.root_sum(n, k) == vieta[0], n, k, "root sum", vieta[0], closedform.root_sum(n, k))
            res.check(closedform.root_product(n, k) == vieta[-1], n, k, "root product",
                      vieta[-1], closedform.root_product(n, k))
    return res


def _vieta_float(rep: roots.RootReport, spec: closedform.SymmetricSpec, rel: float) -> tuple[bool, bool]:
    z = list(rep.xi_roots)
    s = sum(z)
    want = float(spec.root_sum)
    sum_ok = abs(s - want) <= rel * max(1.0, abs(want), sum(abs(v) for v in z))
    # product through logs: moduli can be large
    want_p = spec.root_product
    log_mod = sum(math.log(abs(v)) for v in z)
    phase = sum(math.atan2(v.imag, v.real) for v in z)
    sign = math.cos(phase)
    prod_ok = (abs(log_mod - math.log(abs(want_p))) <= rel * max(1.0, len(z))
               and (sign > 0) == (want_p > 0))
    return sum_ok, prod_ok


def suite_roots(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("roots")
    N = cfg.n_abs_max
    for k in _ks(cfg):
        rows = roots.zeta_sweep(k, [n for n in range(-N, N + 1) if n], cfg.tol)
        for row in rows:
            n = row.n
            if not _nonvanishing(n, k):
                continue
            if not res.check(row.error is None, n, k, "convergence", f"residual <= {cfg.tol}", row.error):
                continue
            rep = roots.find_roots(n, k, cfg.tol)
            deg = indexing.profile(n, k).xi_degree
            res.check(len(rep.xi_roots) == deg, n, k, "root count", deg, len(rep.xi_roots))
            res.check(rep.residual <= cfg.tol, n, k, "residual", f"<= {cfg.tol}", rep.residual)
            res.check(not roots.numeric_clusters(rep), n, k, "simple numeric roots", [], roots.numeric_clusters(rep))
            if deg and n not in (1, 2) and abs(n) <= 120:
                spec = closedform.sigma(n, k)
                s_ok, p_ok = _vieta_float(rep, spec, 1e-6)
                res.check(s_ok, n, k, "float root sum", spec.root_sum, sum(rep.xi_roots))
                res.check(p_ok, n, k, "float root product", spec.root_product, "mismatch")
            cls = roots.real_roots_classify(n, k, cfg.tol)
            res.check(cls.holds, n, k, f"real roots: {cls.claim}", "none outside", cls.violations)
    for n, k in tables.FIG2_CASES:
        res.check(roots.rotational_symmetry_check(n, k), n, k, "k-fold rotational symmetry", True, False)
    for n in range(2, min(N, 50) + 1):
        res.check(roots.k2_root_formula_check(n, cfg.tol), n, 2, "roots 2i cos(j pi/n)", True, False)
    return res


def suite_identities(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("identities")
    N = cfg.n_abs_max
    for n in range(1, N + 1):
        lhs, rhs = fib_poly(-n, 2), fib_poly(n, 2) * (-1) ** (n - 1)
        res.check(lhs == rhs, -n, 2, "F_-n = (-1)^(n-1) F_n", rhs, lhs)
    for k in range(2, max(cfg.k_max, 10) + 1):
        for s in range(2, k + 2):
            res.check(factorization.check_xks_family(k, s), -s * k, k,
                      "F_{-sk} = -x(x^k+1)^{s-2}(x^k+s)", True, False)
        s = k + 2
        res.check(not factorization.check_xks_family(k, s), -s * k, k,
                  "family stops at s = k+2", False, True)
    for k in _ks(cfg):
        # independent integer recurrence for the k-bonacci numbers
        seq = {m: 0 for m in range(0, k - 1)}
        seq[k - 1] = 1
        for m in range(k, N + 1):
            seq[m] = sum(seq[m - j] for j in range(1, k + 1))
        for m in range(k - 1, N + 1):
            res.check(fib_number(m, k) == seq[m], m, k, "F_{n,k}(1) is a k-bonacci number", seq[m], fib_number(m, k))
        # backward step: F_m = F_{m+k} - sum_{j=1}^{k-1} F_{m+j} at x = 1
        back = {m: number_at_one(m, k) for m in range(-N, k + 1)}
        for m in range(-N, 1):
            want = back[m + k] - sum(back[m + j] for j in range(1, k))
            res.check(back[m] == want, m, k, "numbers at x = 1 obey the recurrence", want, back[m])
    return res


def suite_exceptional(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("exceptional")
    got3 = dict(factorization.scan_vanishing_coefficients(3, -14, -14))
    res.check(got3.get(-14) == (3,), -14, 3, "T_-14 missing x^3", (3,), got3.get(-14))
    got5 = dict(factorization.scan_vanishing_coefficients(5, -66, -66))
    res.check(got5.get(-66) == (5, 10), -66, 5, "P_-66 missing x^5, x^10", (5, 10), got5.get(-66))
    for k in range(2, cfg.k_max + 1, 2):
        found = factorization.scan_vanishing_coefficients(k, -cfg.n_abs_max, 0)
        res.check(not found, None, k, "no gaps for even k", [], found)
    for k in range(3, cfg.k_max + 1, 2):
        found = factorization.scan_vanishing_coefficients(k, -cfg.n_abs_max, 0)
        res.notes.append(f"k={k}: {len(found)} polynomials with interior zero coefficients in [-{cfg.n_abs_max}, 0]")
    return res


def suite_tables(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("tables")
    audit = tables.audit_tables()
    res.checked = audit.cells
    for d in audit.unexplained:
        res.failures.append(Failure("tables", None, None, f"{d.table} n={d.n} {d.column}", d.printed, d.ours))
    for f in audit.errata:
        res.check(not f.printed_consistent and f.ours_consistent, None, None,
                  f"erratum {f.key[0]} n={f.key[1]} {f.key[2]}: {f.witness}",
                  "printed cell fails, exact cell passes",
                  f"printed {'passes' if f.printed_consistent else 'fails'}, exact {'passes' if f.ours_consistent else 'fails'}")
    res.notes.append(f"{audit.text_equal}/{audit.cells} cells identical as text, "
                     f"{audit.math_equal}/{audit.cells} equal as polynomials")
    for key, why in sorted(tables.ERRATA.items()):
        res.notes.append(f"misprint {key[0]} n={key[1]} {key[2]} (refuted by {why})")
    for key, why in sorted(tables.LAYOUT_VARIANTS.items()):
        res.notes.append(f"layout {key[0]} n={key[1]} {key[2]}: {why}")
    return res


def suite_triangle(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("triangle")
    rows_n = min(cfg.n_abs_max, 12)
    for k in _ks(cfg):
        for m in range(0, rows_n + 1):
            for j in range((k - 1) * m + 1):
                a, b = triangle.coeff_pos(k, m, j), triangle.coeff_pos_multinomial(k, m, j)
                res.check(a == b, m, k, f"C_k({m},{j}) binomial vs multinomial", b, a)
        width = 3 * k + 3
        for m in range(1, rows_n + 1):
            ser = triangle.series_inverse_power(k, m, width)
            got = list(triangle.row(k, -m, width + 1).coeffs)
            res.check(got == ser, -m, k, "negative row vs series reciprocal", ser, got)
    for m, j, want in ((-2, 5, -4), (-3, 9, -18), (-1, 4, 1)):
        res.check(triangle.coeff_neg(4, m, j) == want, m, 4, f"C_4({m},{j})", want, triangle.coeff_neg(4, m, j))
    return res


def suite_conjectures(cfg: VerifyConfig) -> SuiteResult:
    """Empirical statements about zeta; not run unless asked for by name."""
    res = SuiteResult("conjectures")
    N = cfg.n_abs_max
    for k in range(3, max(3, cfg.k_max) + 1):
        rows = roots.zeta_sweep(k, range(-N, 0), cfg.tol)
        chk = roots.check_zeta_bound(rows, 1e-6)
        res.checked += chk.checked
        for n, z, b in chk.bound_violations:
            res.failures.append(Failure("conjectures", n, k, "zeta <= floor(|n|/k)", f"<= {b}", f"{z:.9g}"))
        for n, z, b in chk.equality_violations:
            res.failures.append(Failure("conjectures", n, k, "zeta = floor(|n|/k) at r = 1", b, f"{z:.9g}"))
        slopes = roots.branch_slopes(rows)
        res.check(roots.slopes_decreasing(slopes), None, k, "branch slopes decrease in r", "decreasing",
                  {r: round(s, 6) for r, s in slopes.items()})
    return res


SUITES = {
    "vanishing": suite_vanishing,
    "theorem1": suite_theorem1,
    "closedform": suite_closedform,
    "terms": suite_terms,
    "factorization": suite_factorization,
    "sigma": suite_sigma,
    "roots": suite_roots,
    "identities": suite_identities,
    "exceptional": suite_exceptional,
    "tables": suite_tables,
    "triangle": suite_triangle,
    "conjectures": suite_conjectures,
}
DEFAULT_SUITES = tuple(name for name in SUITES if name != "conjectures")


def _run_one(args: tuple[str, VerifyConfig]) -> SuiteResult:
    name, cfg = args
    t0 = time.perf_counter()
    res = SUITES[name](cfg)
    res.seconds = time.perf_counter() - t0
    return res


def run(cfg: VerifyConfig) -> list[SuiteResult]:
    """Run the selected suites (all but ``conjectures`` by default), in order."""
    names = cfg.suites or DEFAULT_SUITES
    items = [(name, cfg) for name in names]
    if cfg.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            return list(pool.map(_run_one, items))
    return [_run_one(it) for it in items]


# -- reports ------------------------------------------------------------------

def report_text(results: list[SuiteResult], timing: bool = True) -> str:
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.name}: {status} ({r.checked} checks, {len(r.failures)} failures)")
        lines += [f"  note: {note}" for note in r.notes]
        for f in r.failures[:50]:
            where = ", ".join(f"{a}={v}" for a, v in (("n", f.n), ("k", f.k)) if v is not None)
            lines.append(f"  fail [{where}] {f.check}: expected {f.expected}, got {f.got}")
        if len(r.failures) > 50:
            lines.append(f"  ... {len(r.failures) - 50} more failures")
        if timing:
            lines.append(f"# time {r.name} {r.seconds:.2f}s")
    total = sum(r.checked for r in results)
    bad = sum(len(r.failures) for r in results)
    lines.append(f"overall: {'PASS' if bad == 0 else 'FAIL'} ({total} checks, {bad} failures)")
    return "\n".join(lines) + "\n"


def report_json(results: list[SuiteResult]) -> list[dict]:
    out = []
    for r in results:
        out.append({
            "suite": r.name,
            "passed": r.passed,
            "checked": r.checked,
            "notes": r.notes,
            "failures": [asdict(f) for f in r.failures],
        })
    return out


def report_csv(results: list[SuiteResult]) -> str:
    lines = ["suite,status,checked,failures"]
    lines += [f"{r.name},{'pass' if r.passed else 'fail'},{r.checked},{len(r.failures)}" for r in results]
    return "\n".join(lines) + "\n"


__all__ = ["VerifyConfig", "SuiteResult", "Failure", "SUITES", "DEFAULT_SUITES", "run",
           "report_text", "report_json", "report_csv"]
