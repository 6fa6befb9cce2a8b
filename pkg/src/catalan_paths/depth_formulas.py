"""Depth functions D_{m,n}: depth of leaf m summed over every tree with n internal vertices.

Three routes are provided and kept independent of one another:

* the master equation, filled as a memoized dynamic programme;
* the sum form  m C_{n+1} - C_n - 2 sum_{k<=m-2} (m-k-1) C_k C_{n-k};
* the explicit form with a single C_m C_{n-m} product.

The ansatz polynomials f_m, g_m (D_m(x) = f_m(x) C(x) + g_m(x)) are exposed
both from their closed patterns and from their defining recursion.
"""
from __future__ import annotations

import os
import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .catalan_core import catalan, register_cache
from .errors import DomainError, FormulaMismatch, ResourceBoundError
from .series_engine import Series1, catalan_series

DP_BOUND_ENV = "CATALAN_PATHS_DP_BOUND"
DEFAULT_DP_BOUND = 512

__all__ = [
    "DepthQuery",
    "AnsatzPolys",
    "depth_first_leaf",
    "depth_second_leaf",
    "depth_recursive",
    "depth_sum_form",
    "depth_explicit_form",
    "depth_closed_form",
    "ansatz_polys",
    "ansatz_polys_recursive",
    "ansatz_series",
    "dp_bound",
]


@dataclass(frozen=True)
class DepthQuery:
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 0 or not 1 <= self.m <= self.n + 1:
            raise DomainError(f"need 1 <= m <= n+1, got m={self.m}, n={self.n}")


def _query(m: int, n: int) -> DepthQuery:
    return DepthQuery(m, n)


def dp_bound() -> int:
    raw = os.environ.get(DP_BOUND_ENV, "").strip()
    return int(raw) if raw else DEFAULT_DP_BOUND


def depth_first_leaf(n: int) -> int:
    """D_{1,n} = C_{n+1} - C_n."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    return catalan(n + 1) - catalan(n)


def depth_second_leaf(n: int) -> int:
    """D_{2,n} = 2 C_{n+1} - 3 C_n; a single-leaf tree has no second leaf."""
    if n < 1:
        raise DomainError("D_{2,n} needs n >= 1: a tree with one leaf has no second leaf")
    return 2 * catalan(n + 1) - 3 * catalan(n)


# ---------------------------------------------------------------------------
# Master equation


class _DepthTable:
    """D_{m,n} for m' <= m and n' <= n, filled in order of increasing n."""

    def __init__(self) -> None:
        self.values: dict[tuple[int, int], int] = {}
        self.max_m = 0
        self.max_n = -1
        self._lock = threading.Lock()

    def clear(self) -> None:
        with self._lock:
            self.values.clear()
            self.max_m = 0
            self.max_n = -1

    def _fill(self, m: int, n: int) -> None:
        values = self.values
        c = [catalan(k) for k in range(n + 1)]
        for nn in range(n + 1):
            for mm in range(1, min(m, nn + 1) + 1):
                if (mm, nn) in values:
                    continue
                if nn == 0:
                    # the lone leaf sits at depth zero
                    values[(mm, nn)] = depth_first_leaf(0)
                    continue
                total = c[nn]
                for k in range(mm - 1, nn):
                    total += values[(mm, k)] * c[nn - 1 - k]
                for k in range(mm - 1):
                    total += values[(mm - k - 1, nn - k - 1)] * c[k]
                values[(mm, nn)] = total
        self.max_m = max(self.max_m, m)
        self.max_n = max(self.max_n, n)

    def get(self, m: int, n: int) -> int:
        key = (m, n)
        value = self.values.get(key)
        if value is not None:
            return value
        with self._lock:
            if key not in self.values:
                self._fill(max(m, self.max_m), max(n, self.max_n))
            return self.values[key]


_table = _DepthTable()
register_cache(_table.clear)


def depth_recursive(m: int, n: int) -> int:
    """D_{m,n} from the master equation

        D_{m,n} = C_n + sum_{k=m-1}^{n-1} D_{m,k} C_{n-1-k}
                      + sum_{k=0}^{m-2} D_{m-k-1,n-k-1} C_k

    which holds for n >= 1; the single-leaf value D_{1,0} = 0 is the seed.
    """
    _query(m, n)
    bound = dp_bound()
    if n > bound:
        raise ResourceBoundError(f"master-equation table limited to n <= {bound} (got n={n})", bound)
    return _table.get(m, n)


# ---------------------------------------------------------------------------
# Closed forms


def depth_sum_form(m: int, n: int) -> int:
    """m C_{n+1} - C_n - 2 sum_{k=0}^{m-2} (m-k-1) C_k C_{n-k}."""
    _query(m, n)
    tail = sum((m - k - 1) * catalan(k) * catalan(n - k) for k in range(m - 1))
    return m * catalan(n + 1) - catalan(n) - 2 * tail


def _explicit(m: int, n: int) -> Fraction:
    num = 2 * m * (m + 1) * (2 * n - 2 * m + 1) * (2 * n - 2 * m + 3) * catalan(m) * catalan(n - m)
    return Fraction(num, (n + 1) * (n + 2)) - catalan(n)


def depth_explicit_form(m: int, n: int) -> int:
    """2m(m+1)(2n-2m+1)(2n-2m+3)/((n+1)(n+2)) C_m C_{n-m} - C_n.

    The formula needs m <= n; the last leaf is reached through the mirror
    D_{n+1,n} = D_{1,n}.
    """
    _query(m, n)
    if n == 0:
        return 0
    if m == n + 1:
        m = 1
    value = _explicit(m, n)
    if value.denominator != 1:
        raise FormulaMismatch(f"explicit D_{{{m},{n}}} is not an integer: {value}")
    return value.numerator


def depth_closed_form(m: int, n: int) -> int:
    """D_{m,n} from the closed forms, which must agree with each other."""
    a = depth_sum_form(m, n)
    b = depth_explicit_form(m, n)
    if a != b:
        raise FormulaMismatch(f"D_{{{m},{n}}}: sum form {a} != explicit form {b}")
    return a


# ---------------------------------------------------------------------------
# Ansatz polynomials


@dataclass(frozen=True)
class AnsatzPolys:
    """f_m and g_m as (coefficient of 1/x, [x^0, ..., x^(m-2)])."""

    m: int
    f_inv: Fraction
    f: tuple[Fraction, ...] = field(default_factory=tuple)
    g_inv: Fraction = Fraction(0)
    g: tuple[Fraction, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        width = max(self.m - 1, 1)
        if len(self.f) > width or len(self.g) > width:
            raise DomainError(f"ansatz polynomials for m={self.m} have degree at most {width - 1}")

    def f_terms(self) -> dict[int, Fraction]:
        return _terms(self.f_inv, self.f)

    def g_terms(self) -> dict[int, Fraction]:
        return _terms(self.g_inv, self.g)


def _terms(inv: Fraction, poly) -> dict[int, Fraction]:
    out = {-1: inv} if inv else {}
    for k, v in enumerate(poly):
        if v:
            out[k] = v
    return out


def _pack(m: int, f: dict[int, Fraction], g: dict[int, Fraction]) -> AnsatzPolys:
    width = max(m - 1, 1)

    def body(terms: dict[int, Fraction]) -> tuple[Fraction, ...]:
        if terms and (min(terms) < -1 or max(terms) >= width):
            raise FormulaMismatch(f"ansatz for m={m} left its expected degree range")
        return tuple(Fraction(terms.get(k, 0)) for k in range(width))

    return AnsatzPolys(m, Fraction(f.get(-1, 0)), body(f), Fraction(g.get(-1, 0)), body(g))


def ansatz_polys(m: int) -> AnsatzPolys:
    """f_m = m/x - 1 - 2 sum (m-k-1) C_k x^k,  g_m = -m/x + sum [(m-k-2) C_{k+1} + C_k] x^k."""
    if m < 1:
        raise DomainError(f"ansatz polynomials need m >= 1, got {m}")
    f: dict[int, Fraction] = {-1: Fraction(m), 0: Fraction(-1)}
    g: dict[int, Fraction] = {-1: Fraction(-m)}
    for k in range(m - 1):
        f[k] = f.get(k, Fraction(0)) - 2 * (m - k - 1) * catalan(k)
        g[k] = g.get(k, Fraction(0)) + (m - k - 2) * catalan(k + 1) + catalan(k)
    return _pack(m, f, g)


def _laurent_mul(a: dict[int, Fraction], b: dict[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, Fraction(0)) + x * y
    return {k: v for k, v in out.items() if v}


def _laurent_add(*parts: dict[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for p in parts:
        for k, v in p.items():
            out[k] = out.get(k, Fraction(0)) + v
    return {k: v for k, v in out.items() if v}


def ansatz_polys_recursive(m: int) -> AnsatzPolys:
    """f_m, g_m from their defining recursion, seeded by f_1 = 1/x - 1, g_1 = -1/x.

        f_m = 1/x + sum_{j=0}^{m-2} C_j x^j [f_{m-j-1} + x g_{m-j-1} - 1]
        g_m = -1/x - sum_{j=0}^{m-2} C_j x^j f_{m-j-1}
    """
    if m < 1:
        raise DomainError(f"ansatz polynomials need m >= 1, got {m}")
    fs: list[dict[int, Fraction]] = [{}, {-1: Fraction(1), 0: Fraction(-1)}]
    gs: list[dict[int, Fraction]] = [{}, {-1: Fraction(-1)}]
    x = {1: Fraction(1)}
    for mm in range(2, m + 1):
        f = {-1: Fraction(1)}
        g = {-1: Fraction(-1)}
        for j in range(mm - 1):
            cj = {j: Fraction(catalan(j))}
            inner = _laurent_add(fs[mm - j - 1], _laurent_mul(x, gs[mm - j - 1]), {0: Fraction(-1)})
            f = _laurent_add(f, _laurent_mul(cj, inner))
            g = _laurent_add(g, _laurent_mul({j: -Fraction(catalan(j))}, fs[mm - j - 1]))
        fs.append(f)
        gs.append(g)
    return _pack(m, fs[m], gs[m])


def ansatz_series(m: int, order: int) -> Series1:
    """D_m(x) = f_m(x) C(x) + g_m(x) as a power series through x^order.

    The 1/x parts cancel (f has +m/x, g has -m/x), leaving m (C - 1)/x.
    """
    polys = ansatz_polys(m)
    if polys.f_inv + polys.g_inv != 0:
        raise FormulaMismatch(f"1/x terms of f_{m} and g_{m} do not cancel")
    c = catalan_series(order + 1)
    head = c.lower() * polys.f_inv
    c = c.truncate(order)
    return head + Series1(polys.f, order) * c + Series1(polys.g, order)
