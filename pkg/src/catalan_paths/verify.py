"""Verification suites behind ``catalan-paths verify``.

A check is a callable that returns ``None`` on success or a string naming
the first counterexample.  Exceptions raised inside a check count as
failures and are reported with their message, so a corrupted table cannot
crash a run.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from . import catalan_core as cc
from . import depth_formulas as df
from . import path_lengths as pl
from . import series_engine as se
from . import tree_oracle as to
from .errors import DomainError

Check = Callable[[], Optional[str]]

SUITES = ("identities", "oracle", "series", "asymptotics")


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.name}"
        return f"FAIL {self.name}: {self.detail}"


def _first(pairs: Iterable[tuple[object, object, object]]) -> Optional[str]:
    """First (label, got, want) triple with got != want, rendered."""
    for label, got, want in pairs:
        if got != want:
            return f"{label}: got {got}, expected {want}"
    return None


def run_checks(checks: list[tuple[str, Check]]) -> list[CheckResult]:
    results = []
    for name, check in checks:
        try:
            detail = check()
        except Exception as exc:  # report, never crash
            results.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
            continue
        results.append(CheckResult(name, detail is None, detail or ""))
    return results


# ---------------------------------------------------------------------------
# identities


def identity_checks(nmax: int = 50) -> list[tuple[str, Check]]:
    big = max(nmax, 200)

    def catalan_routes():
        return _first(
            (f"C_{n}", cc.catalan(n), cc.catalan_closed(n)) for n in range(big + 1)
        ) or _first((f"segner n={n}", cc.segner_sum(n), cc.catalan(n)) for n in range(1, big + 1))

    def r1():
        return _first((f"R1 n={n}", *cc.identity_r1(n)) for n in range(max(nmax, 100) + 1))

    def r2():
        return _first((f"R2 n={n}", *cc.identity_r2(n)) for n in range(max(nmax, 100) + 1))

    def segner_partial():
        return _first(
            (f"incomplete Segner p={p} n={n}", cc.incomplete_segner(p, n), cc.incomplete_segner_direct(p, n))
            for n in range(nmax + 1)
            for p in range(n + 1)
        )

    def rautu():
        return _first(
            (f"incomplete Rautu p={p} n={n}", cc.incomplete_rautu(p, n), cc.incomplete_rautu_direct(p, n))
            for n in range(1, nmax + 1)
            for p in range(1, n + 1)
        )

    def depth_forms():
        return _first(
            (f"D_{{{m},{n}}}", df.depth_recursive(m, n), df.depth_closed_form(m, n))
            for n in range(nmax + 1)
            for m in range(1, n + 2)
        )

    def depth_mirror():
        return _first(
            (f"mirror D_{{{m},{n}}}", df.depth_closed_form(m, n), df.depth_closed_form(n + 2 - m, n))
            for n in range(nmax + 1)
            for m in range(1, n + 2)
        )

    def ansatz():
        return _first((f"f_m/g_m m={m}", df.ansatz_polys(m), df.ansatz_polys_recursive(m)) for m in range(1, 12))

    def averages():
        return _first(
            (f"A_{n}({r}) * count", pl.average_length(n, r) * pl.path_count(n, r), pl.summed_length_closed(n, r))
            for n in range(1, max(nmax, 200) + 1)
            for r in range(1, n + 1, max(1, n // 16))
        )

    def specials():
        return _first(
            (f"A_{n}({r}) special form", pl.average_length(n, r), pl.average_special(n, r))
            for n in range(1, max(nmax, 200) + 1)
            for r in range(1, min(n, 4) + 1)
        )

    def recursion():
        top = min(nmax, 30)
        return _first(
            (f"S_{n}({r}) recursion", pl.summed_length_recursive(n, r), pl.summed_length_closed(n, r))
            for n in range(1, top + 1)
            for r in range(1, n + 1)
        )

    return [
        ("Catalan table = factorial form = Segner sum", catalan_routes),
        ("R1: (n+1)C_{n+1} = sum (2q+1) C_q C_{n-q}", r1),
        ("R2: (2n+1)C_n = sum (q+1) C_q C_{n-q}", r2),
        ("incomplete Segner closed form", segner_partial),
        ("incomplete Rautu closed form", rautu),
        ("depth: master equation = closed forms", depth_forms),
        ("depth: left-right mirror", depth_mirror),
        ("ansatz f_m, g_m: patterns = recursion", ansatz),
        ("A_n(r) * path count = S_n(r)", averages),
        ("A_n(r) special cases r <= 4", specials),
        ("S_n(r): inception recursion = closed form", recursion),
    ]


# ---------------------------------------------------------------------------
# oracle


def oracle_checks(nmax: int = 10) -> list[tuple[str, Check]]:
    if nmax > to.pair_bound():
        raise DomainError(f"oracle suite needs nmax <= {to.pair_bound()} (path-length oracle bound)")

    def counts():
        return _first(
            (f"#trees n={n}", sum(1 for _ in to.enumerate_trees(n)), cc.catalan(n)) for n in range(min(nmax, 11) + 1)
        )

    def depths():
        out = []
        for n in range(nmax + 1):
            row = to.oracle_depth_row(n)
            for m in range(1, n + 2):
                out.append((f"D_{{{m},{n}}} oracle vs closed", row[m - 1], df.depth_closed_form(m, n)))
                out.append((f"D_{{{m},{n}}} oracle vs recursion", row[m - 1], df.depth_recursive(m, n)))
        return _first(out)

    def paths():
        out = []
        for n in range(1, nmax + 1):
            for r in range(1, n + 1):
                st = to.oracle_path_stats(n, r)
                out.append((f"S_{n}({r}) oracle vs closed", st.sum, pl.summed_length_closed(n, r)))
                out.append((f"S_{n}({r}) oracle vs recursion", st.sum, pl.summed_length_recursive(n, r)))
                out.append((f"pairs n={n} r={r}", st.count, pl.path_count(n, r)))
        return _first(out)

    return [
        ("enumeration yields C_n shapes", counts),
        ("depth sums: oracle = closed = recursion", depths),
        ("path sums: oracle = closed = recursion; counts", paths),
    ]


# ---------------------------------------------------------------------------
# series


def series_checks(order: int = se.DEFAULT_ORDER, nmax: int = 16) -> list[tuple[str, Check]]:
    N = order
    top = min(nmax, (N + 1) // 2)

    def quadratic():
        c = se.catalan_series(N)
        resid = c - 1 - (c * c).shift(1).truncate(N)
        if not resid.is_zero():
            return "C - 1 - xC^2 has nonzero coefficients"
        return _first(
            (f"[x^{k}] fixed point vs table", a, b)
            for k, (a, b) in enumerate(zip(se.catalan_series(N, "fixed_point").coeffs, c.coeffs))
        )

    def k_diagonal():
        k = se.k_series(N)
        return None if k.diagonal() == se.catalan_series(N) else "K(x,x) != C(x)"

    def k_derivative():
        k = se.k_series(N)
        kk = k.truncate(N - 1)
        resid = k.d_dy() - se.Series2.from_x(se.catalan_series(N - 1)) * kk * kk
        return None if resid.is_zero() else "dK/dz != C K^2"

    def inverse_sqrt():
        return None if se.inverse_sqrt_check(N).is_zero() else "(1-2xC)/sqrt(1-4x) != 1"

    def c3_expansions():
        c = se.catalan_series(N)
        b = se.central_binomial_series(N)
        one = c * b
        two = c * c * b
        return _first(
            [(f"[x^{n}] C/sqrt(1-4x)", one.coeff(n), (2 * n + 1) * cc.catalan(n)) for n in range(N + 1)]
            + [(f"[x^{n}] C^2/sqrt(1-4x)", two.coeff(n), (n + 1) * cc.catalan(n + 1)) for n in range(N + 1)]
        )

    def s1_series():
        c = se.catalan_series(N)
        s = (2 * c * c - 3 * c + 1) / (1 - 2 * c.shift(1).truncate(N))
        return _first(
            (f"[x^{n}] S(1,x)", s.coeff(n), Fraction(3 * n * n * cc.catalan(n), n + 2)) for n in range(N + 1)
        )

    def triangle():
        rows = se.catalan_triangle(6)
        return None if rows[5] == [1, 5, 14, 28, 42, 42] else f"row 5 = {rows[5]}"

    def rooted():
        q = se.rooted_path_kernel(N)
        return _first(
            (f"[x^{n} y^{p}] rooted kernel", q.coeff(n, p), cc.catalan(n) if p <= n else 0)
            for n in range(N + 1)
            for p in range(N - n + 1)
        )

    def rooted_length():
        g = se.rooted_length_sum_series(N)
        return _first(
            (f"[x^{n} y^{p}] rooted length sum", g.coeff(n, p), df.depth_closed_form(p + 1, n) if p <= n else 0)
            for n in range(N + 1)
            for p in range(N - n + 1)
        )

    def leaf_kernel():
        k = se.leaf_path_kernel(min(N, 2 * top))
        out = []
        for n in range(1, top + 1):
            for s in range(n):
                closed = pl.summed_length_closed(n, s + 1)
                out.append((f"[x^{n} y^{s}] leaf kernel", k.coeff(n, s), closed))
                out.append((f"Lagrange form n={n} s={s}", se.lagrange_extract(n, s), closed))
        return _first(out)

    def lagrange_inversion():
        phi = se.Series1([1, 2, 1], N)
        out = []
        for n in range(1, min(N, 24) + 1):
            for f in (se.Series1([0, 1], N), se.Series1([1, 1], N), se.Series1([1, 2, 1], N)):
                out.append((f"Lagrange n={n}", *se.lagrange_inversion_check(f, phi, n)))
        return _first(out)

    def sum_out():
        k = se.k_series(min(N, 32))
        return _first((f"sum-out n={n}", *se.sum_out_check(k, n)) for n in range(k.order + 1))

    return [
        ("C = 1 + x C^2 (table and fixed point)", quadratic),
        ("K(x,x) = C(x)", k_diagonal),
        ("dK/dz = C K^2", k_derivative),
        ("1/(1-2xC) = 1/sqrt(1-4x)", inverse_sqrt),
        ("C/sqrt(1-4x) and C^2/sqrt(1-4x) expansions", c3_expansions),
        ("S(1,x) coefficients = 3n^2 C_n/(n+2)", s1_series),
        ("Catalan triangle row 1 5 14 28 42 42", triangle),
        ("rooted-path kernel = C_n [p <= n]", rooted),
        ("rooted length sum = D_{p+1,n}", rooted_length),
        ("leaf kernel = Lagrange form = closed S_n(s+1)", leaf_kernel),
        ("Lagrange inversion with phi = (1+u)^2", lagrange_inversion),
        ("sum-out identity on K", sum_out),
    ]


# ---------------------------------------------------------------------------
# asymptotics


def asymptotic_checks() -> list[tuple[str, Check]]:
    def limits():
        want = {1: Fraction(3), 2: Fraction(5), 3: Fraction(13, 2), 4: Fraction(31, 4)}
        return _first((f"A_inf({r})", pl.average_limit(r), v) for r, v in want.items())

    def big_n():
        n = 10**6
        for r in range(1, 9):
            gap = abs(pl.average_length(n, r) - pl.average_limit(r))
            if gap >= Fraction(1, 10**4):
                return f"|A_{n}({r}) - A_inf({r})| = {float(gap):.3g}"
        return None

    def continuum():
        r = 10**4
        ratio = float(pl.average_limit(r)) / pl.average_continuum(r)
        return None if abs(ratio - 1) < 0.01 else f"ratio at r={r} is {ratio:.6f}"

    def monotone():
        ratios = [float(pl.average_limit(r)) / pl.average_continuum(r) for r in (10**2, 10**3, 10**4)]
        ok = all(abs(b - 1) < abs(a - 1) for a, b in zip(ratios, ratios[1:]))
        return None if ok else f"ratios {ratios} do not approach 1"

    return [
        ("A_inf(r) for r = 1..4", limits),
        ("|A_(10^6)(r) - A_inf(r)| < 1e-4 for r <= 8", big_n),
        ("A_inf(10^4) within 1% of sqrt(64 r/pi)", continuum),
        ("A_inf(r)/sqrt(64 r/pi) approaches 1", monotone),
    ]


def suite_checks(suite: str, order: int | None = None, nmax: int | None = None) -> list[tuple[str, Check]]:
    if suite == "identities":
        return identity_checks(50 if nmax is None else nmax)
    if suite == "oracle":
        return oracle_checks(10 if nmax is None else nmax)
    if suite == "series":
        return series_checks(se.DEFAULT_ORDER if order is None else order, 16 if nmax is None else nmax)
    if suite == "asymptotics":
        return asymptotic_checks()
    raise DomainError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
