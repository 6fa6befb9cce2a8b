"""Truncated formal power series in one and two variables.

Coefficients are :class:`fractions.Fraction`.  A :class:`Series1` of order
N knows the coefficients of x^0 .. x^N; a :class:`Series2` of order N knows
every x^i y^j with i + j <= N (total-degree truncation, stored as ragged
rows ``rows[i][j]``).  Asking for a coefficient past the truncation raises
:class:`DomainError` instead of returning a silent zero.

Products and quotients go through an integer fast path: both operands are
scaled to a common denominator, the convolution runs on Python ints and the
result is divided back once per coefficient.
"""
from __future__ import annotations

import csv
import math
from fractions import Fraction
from typing import Iterable, Sequence

from .catalan_core import catalan
from .errors import DomainError, FormulaMismatch

DEFAULT_ORDER = 64

__all__ = [
    "DEFAULT_ORDER",
    "Series1",
    "Series2",
    "series_add",
    "series_sub",
    "series_mul",
    "series_div",
    "coeff",
    "coeff2",
    "geometric",
    "binomial_series",
    "monomial",
    "compose",
    "catalan_series",
    "central_binomial_series",
    "k_series",
    "rooted_path_kernel",
    "rooted_length_sum_series",
    "leaf_path_kernel",
    "inverse_sqrt_check",
    "lagrange_extract",
    "lagrange_inversion_check",
    "lagrange_u_series",
    "sum_out_check",
    "catalan_triangle",
    "dump_csv",
]


def _ints(values: Sequence[Fraction]) -> tuple[list[int], int]:
    """Scale values to integers over their least common denominator."""
    den = 1
    for v in values:
        d = v.denominator
        if d != 1:
            den = den * d // math.gcd(den, d)
    return [v.numerator * (den // v.denominator) for v in values], den


def _frac(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


# ---------------------------------------------------------------------------
# One variable


class Series1:
    """Power series in x known through x^order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise DomainError(f"series order must be non-negative, got {order}")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        else:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.order = order

    @classmethod
    def zero(cls, order: int) -> "Series1":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "Series1":
        return cls([1], order)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"Series1([{shown}{more}], order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series1):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def coeff(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise DomainError(f"coefficient x^{n} is past truncation order {self.order}")
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, order: int) -> "Series1":
        if order > self.order:
            raise DomainError(f"cannot raise truncation order {self.order} to {order}")
        return Series1(self.coeffs[: order + 1], order)

    # arithmetic

    def _lift(self, other) -> "Series1":
        if isinstance(other, Series1):
            return other
        return Series1([other], self.order)

    def __add__(self, other) -> "Series1":
        return series_add(self, self._lift(other))

    __radd__ = __add__

    def __sub__(self, other) -> "Series1":
        return series_sub(self, self._lift(other))

    def __rsub__(self, other) -> "Series1":
        return series_sub(self._lift(other), self)

    def __neg__(self) -> "Series1":
        return Series1([-c for c in self.coeffs], self.order)

    def __mul__(self, other) -> "Series1":
        if isinstance(other, Series1):
            return series_mul(self, other)
        k = _frac(other)
        return Series1([k * c for c in self.coeffs], self.order)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Series1":
        if isinstance(other, Series1):
            return series_div(self, other)
        k = _frac(other)
        if k == 0:
            raise DomainError("division by zero scalar")
        return Series1([c / k for c in self.coeffs], self.order)

    def __rtruediv__(self, other) -> "Series1":
        return series_div(self._lift(other), self)

    def __pow__(self, p: int) -> "Series1":
        if p < 0:
            return series_div(Series1.one(self.order), self ** (-p))
        result = Series1.one(self.order)
        base = self
        while p:
            if p & 1:
                result = result * base
            p >>= 1
            if p:
                base = base * base
        return result

    # index manipulations

    def shift(self, k: int = 1) -> "Series1":
        """x^k * a; the product is known one order further per power."""
        if k < 0:
            raise DomainError("use lower() to divide by powers of x")
        return Series1([0] * k + list(self.coeffs), self.order + k)

    def lower(self) -> "Series1":
        """(a - a_0) / x."""
        if self.order == 0:
            raise DomainError("lower() needs order >= 1")
        return Series1(self.coeffs[1:], self.order - 1)

    def derivative(self) -> "Series1":
        if self.order == 0:
            raise DomainError("derivative() needs order >= 1")
        return Series1([k * self.coeffs[k] for k in range(1, self.order + 1)], self.order - 1)

    def euler(self) -> "Series1":
        """x d/dx a."""
        return Series1([k * c for k, c in enumerate(self.coeffs)], self.order)

    def scale_arg(self, c) -> "Series1":
        """a(c x)."""
        c = _frac(c)
        out = []
        p = Fraction(1)
        for a in self.coeffs:
            out.append(a * p)
            p *= c
        return Series1(out, self.order)

    def assert_integral(self, what: str = "series") -> list[int]:
        bad = [k for k, c in enumerate(self.coeffs) if c.denominator != 1]
        if bad:
            raise FormulaMismatch(f"{what}: non-integer coefficient at x^{bad[0]}")
        return [c.numerator for c in self.coeffs]


def _check_same_kind(a, b) -> None:
    if type(a) is not type(b):
        raise DomainError(f"cannot combine {type(a).__name__} with {type(b).__name__}")


def series_add(a, b):
    _check_same_kind(a, b)
    if isinstance(a, Series1):
        n = min(a.order, b.order)
        return Series1([a.coeffs[k] + b.coeffs[k] for k in range(n + 1)], n)
    n = min(a.order, b.order)
    return Series2([[a.rows[i][j] + b.rows[i][j] for j in range(n - i + 1)] for i in range(n + 1)], n)


def series_sub(a, b):
    return series_add(a, -b)


def _conv(x: list[int], y: list[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, xi in enumerate(x[: n + 1]):
        if xi:
            lim = n - i
            for j, yj in enumerate(y[: lim + 1]):
                out[i + j] += xi * yj
    return out


def series_mul(a, b):
    _check_same_kind(a, b)
    if isinstance(a, Series2):
        return _mul2(a, b)
    n = min(a.order, b.order)
    xa, da = _ints(a.coeffs[: n + 1])
    xb, db = _ints(b.coeffs[: n + 1])
    den = da * db
    return Series1([Fraction(v, den) for v in _conv(xa, xb, n)], n)


def series_div(a, b):
    _check_same_kind(a, b)
    if isinstance(a, Series2):
        return _div2(a, b)
    if b.coeffs[0] == 0:
        raise DomainError("series division needs a nonzero constant term")
    n = min(a.order, b.order)
    xa, da = _ints(a.coeffs[: n + 1])
    xb, db = _ints(b.coeffs[: n + 1])
    b0 = xb[0]
    # a/b = (xa/da) / (xb/db) = (db/da) * xa/xb
    q: list = []
    if b0 in (1, -1):
        for k in range(n + 1):
            acc = xa[k]
            for j in range(1, k + 1):
                acc -= xb[j] * q[k - j]
            q.append(acc * b0)
        scale = Fraction(db, da)
        return Series1([scale * v for v in q], n)
    for k in range(n + 1):
        acc = Fraction(xa[k])
        for j in range(1, k + 1):
            acc -= xb[j] * q[k - j]
        q.append(acc / b0)
    scale = Fraction(db, da)
    return Series1([scale * v for v in q], n)


def coeff(a: Series1, n: int) -> Fraction:
    """The bracket [x^n]{a}."""
    return a.coeff(n)


def geometric(order: int, c=1) -> Series1:
    """1 / (1 - c x)."""
    return series_div(Series1.one(order), Series1([1, -_frac(c)], order))


def binomial_series(p: int, order: int) -> Series1:
    """(1 + x)^p for any integer p (negative p gives the infinite expansion)."""
    return Series1([1, 1], order) ** p


def monomial(p: int, order: int, c=1) -> Series1:
    """c x^p."""
    if p < 0:
        raise DomainError("monomial power must be non-negative")
    out = [0] * (order + 1)
    if p <= order:
        out[p] = _frac(c)
    return Series1(out, order)


def compose(f: Series1, u: Series1) -> Series1:
    """f(u(x)) for u with zero constant term, by Horner's rule."""
    if u.coeffs[0] != 0:
        raise DomainError("composition needs u(0) = 0")
    n = min(f.order, u.order)
    u = u.truncate(n)
    acc = Series1.zero(n)
    for c in reversed(f.coeffs[: n + 1]):
        acc = acc * u + c
    return acc


# ---------------------------------------------------------------------------
# Two variables


class Series2:
    """Power series in (x, y) known for every x^i y^j with i + j <= order."""

    __slots__ = ("rows", "order")

    def __init__(self, rows: Iterable[Iterable], order: int):
        if order < 0:
            raise DomainError(f"series order must be non-negative, got {order}")
        given = [list(r) for r in rows]
        out = []
        for i in range(order + 1):
            row = [_frac(c) for c in given[i]] if i < len(given) else []
            width = order - i + 1
            row = row[:width] + [Fraction(0)] * (width - len(row[:width]))
            out.append(tuple(row))
        self.rows: tuple[tuple[Fraction, ...], ...] = tuple(out)
        self.order = order

    @classmethod
    def zero(cls, order: int) -> "Series2":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "Series2":
        return cls([[1]], order)

    @classmethod
    def from_cells(cls, cells: dict, order: int) -> "Series2":
        rows = [[0] * (order - i + 1) for i in range(order + 1)]
        for (i, j), v in cells.items():
            if i + j <= order:
                rows[i][j] = v
        return cls(rows, order)

    @classmethod
    def from_x(cls, a: Series1, order: int | None = None) -> "Series2":
        """Embed a(x) as a series in (x, y)."""
        n = a.order if order is None else order
        if n > a.order:
            raise DomainError("embedding order exceeds the source series order")
        return cls([[a.coeffs[i]] for i in range(n + 1)], n)

    @classmethod
    def from_y(cls, a: Series1, order: int | None = None) -> "Series2":
        """Embed a(y) as a series in (x, y)."""
        n = a.order if order is None else order
        if n > a.order:
            raise DomainError("embedding order exceeds the source series order")
        return cls([list(a.coeffs[: n + 1])], n)

    @classmethod
    def substitute_xy(cls, a: Series1, order: int | None = None) -> "Series2":
        """a(x y): coefficient c_k lands on cell (k, k)."""
        n = 2 * a.order + 1 if order is None else order
        if n // 2 > a.order:
            raise DomainError("a(xy) at this order needs more coefficients of a")
        return cls.from_cells({(k, k): a.coeffs[k] for k in range(n // 2 + 1)}, n)

    def __repr__(self) -> str:
        return f"Series2(order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series2):
            return NotImplemented
        return self.order == other.order and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.order, self.rows))

    def coeff(self, i: int, j: int) -> Fraction:
        if i < 0 or j < 0:
            return Fraction(0)
        if i + j > self.order:
            raise DomainError(f"coefficient x^{i} y^{j} is past total-degree order {self.order}")
        return self.rows[i][j]

    def cells(self) -> Iterable[tuple[int, int, Fraction]]:
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                yield i, j, v

    def is_zero(self) -> bool:
        return not any(v for row in self.rows for v in row)

    def truncate(self, order: int) -> "Series2":
        if order > self.order:
            raise DomainError(f"cannot raise truncation order {self.order} to {order}")
        return Series2(self.rows, order)

    def _lift(self, other) -> "Series2":
        if isinstance(other, Series2):
            return other
        return Series2([[other]], self.order)

    def __add__(self, other) -> "Series2":
        return series_add(self, self._lift(other))

    __radd__ = __add__

    def __sub__(self, other) -> "Series2":
        return series_sub(self, self._lift(other))

    def __rsub__(self, other) -> "Series2":
        return series_sub(self._lift(other), self)

    def __neg__(self) -> "Series2":
        return Series2([[-v for v in row] for row in self.rows], self.order)

    def __mul__(self, other) -> "Series2":
        if isinstance(other, Series2):
            return series_mul(self, other)
        k = _frac(other)
        return Series2([[k * v for v in row] for row in self.rows], self.order)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Series2":
        if isinstance(other, Series2):
            return series_div(self, other)
        k = _frac(other)
        if k == 0:
            raise DomainError("division by zero scalar")
        return Series2([[v / k for v in row] for row in self.rows], self.order)

    def __rtruediv__(self, other) -> "Series2":
        return series_div(self._lift(other), self)

    def shift_x(self, k: int = 1) -> "Series2":
        """x^k * a, known through total degree order + k."""
        if k < 0:
            raise DomainError("shift_x needs k >= 0")
        rows = [[] for _ in range(k)] + [list(r) for r in self.rows]
        return Series2(rows, self.order + k)

    def d_dy(self) -> "Series2":
        """Partial derivative in the second variable."""
        if self.order == 0:
            raise DomainError("d_dy() needs order >= 1")
        n = self.order - 1
        return Series2(
            [[(j + 1) * self.rows[i][j + 1] for j in range(n - i + 1)] for i in range(n + 1)], n
        )

    def diagonal(self) -> Series1:
        """a(x, x): [x^n] collects every cell with i + j = n."""
        return Series1(
            [sum((self.rows[i][n - i] for i in range(n + 1)), Fraction(0)) for n in range(self.order + 1)],
            self.order,
        )

    def evaluate_y_at_x(self) -> Series1:
        """a(x, x) assembled as sum_j a_j(x) x^j from Series1 arithmetic.

        Independent of :meth:`diagonal`; used by the sum-out check.
        """
        n = self.order
        acc = Series1.zero(n)
        for j in range(n + 1):
            col = Series1([self.rows[i][j] for i in range(n - j + 1)], n - j)
            acc = acc + col.shift(j)
        return acc

    def row_y(self, i: int) -> list[Fraction]:
        """Coefficients of x^i as a list indexed by the power of y."""
        return list(self.rows[i])

    def assert_integral(self, what: str = "series") -> None:
        for i, j, v in self.cells():
            if v.denominator != 1:
                raise FormulaMismatch(f"{what}: non-integer coefficient at x^{i} y^{j}")


def _flatten2(a: Series2, n: int) -> tuple[list[list[int]], int]:
    flat = [v for i in range(n + 1) for v in a.rows[i][: n - i + 1]]
    ints, den = _ints(flat)
    rows = []
    pos = 0
    for i in range(n + 1):
        w = n - i + 1
        rows.append(ints[pos : pos + w])
        pos += w
    return rows, den


def _mul2(a: Series2, b: Series2) -> Series2:
    n = min(a.order, b.order)
    ra, da = _flatten2(a, n)
    rb, db = _flatten2(b, n)
    out = [[0] * (n - i + 1) for i in range(n + 1)]
    for i1 in range(n + 1):
        row_a = ra[i1]
        if not any(row_a):
            continue
        for i2 in range(n - i1 + 1):
            row_b = rb[i2]
            if not any(row_b):
                continue
            lim = n - i1 - i2
            target = out[i1 + i2]
            for j1 in range(lim + 1):
                x = row_a[j1]
                if x:
                    for j2 in range(lim - j1 + 1):
                        target[j1 + j2] += x * row_b[j2]
    den = da * db
    return Series2([[Fraction(v, den) for v in row] for row in out], n)


def _div2(a: Series2, b: Series2) -> Series2:
    n = min(a.order, b.order)
    ra, da = _flatten2(a, n)
    rb, db = _flatten2(b, n)
    b0 = rb[0][0]
    if b0 == 0:
        raise DomainError("series division needs a nonzero constant term")
    exact = b0 in (1, -1)
    q = [[0] * (n - i + 1) for i in range(n + 1)]
    # q_{ij} = (a_{ij} - sum_{(k,l) != (0,0)} b_{kl} q_{i-k, j-l}) / b_00,
    # filled row by row so every q on the right is already known
    for i in range(n + 1):
        for j in range(n - i + 1):
            acc = ra[i][j]
            for k in range(i + 1):
                row_b = rb[k]
                row_q = q[i - k]
                start = 1 if k == 0 else 0
                for l in range(start, j + 1):
                    bl = row_b[l]
                    if bl:
                        acc -= bl * row_q[j - l]
            q[i][j] = acc * b0 if exact else Fraction(acc) / b0
    scale = Fraction(db, da)
    return Series2([[scale * v for v in row] for row in q], n)


def coeff2(a: Series2, i: int, j: int) -> Fraction:
    """The bracket [x^i y^j]{a}."""
    return a.coeff(i, j)


# ---------------------------------------------------------------------------
# Catalan generating functions


def catalan_series(order: int = DEFAULT_ORDER, method: str = "table") -> Series1:
    """C(x) = sum C_n x^n.

    ``method="table"`` reads the shared Catalan table; ``"fixed_point"``
    iterates C <- 1 + x C^2, each pass fixing one more coefficient.
    """
    if method == "table":
        return Series1([catalan(k) for k in range(order + 1)], order)
    if method == "fixed_point":
        c = Series1.one(order)
        for _ in range(order):
            c = 1 + (c * c).shift(1).truncate(order)
        return c
    raise DomainError(f"unknown catalan_series method {method!r}")


def central_binomial_series(order: int = DEFAULT_ORDER) -> Series1:
    """1/sqrt(1-4x) = sum binom(2n, n) x^n, from math.comb."""
    return Series1([math.comb(2 * k, k) for k in range(order + 1)], order)


def inverse_sqrt_check(order: int = DEFAULT_ORDER) -> Series1:
    """(1 - 2x C(x)) * 1/sqrt(1-4x) - 1; zero when both expansions are right."""
    c = catalan_series(order)
    return (1 - 2 * c.shift(1).truncate(order)) * central_binomial_series(order) - 1


def k_series(order: int = DEFAULT_ORDER) -> Series2:
    """K(x, z) = 1 / (1 - z C(x)), counting external rooted paths by size and length."""
    c = catalan_series(order)
    zc = Series2([[0, c.coeffs[i]] for i in range(order + 1)], order)
    return 1 / (1 - zc)


def _rooted_denominator(order: int) -> Series2:
    """1 - x C(x) - x y C(xy)."""
    c = catalan_series(order)
    xc = Series2.from_x(c.shift(1).truncate(order), order)
    # x y C(xy): c_k sits on cell (k+1, k+1)
    cells = {(k + 1, k + 1): c.coeffs[k] for k in range(order // 2)}
    xyc = Series2.from_cells(cells, order)
    return 1 - xc - xyc


def rooted_path_kernel(order: int = DEFAULT_ORDER) -> Series2:
    """1 / (1 - x C(x) - x y C(xy)); [x^n y^p] counts trees by penetration p."""
    return 1 / _rooted_denominator(order)


def rooted_length_sum_series(order: int = DEFAULT_ORDER) -> Series2:
    """G (G - 1) with G = (C(x) - y C(xy)) / (1 - y); [x^n y^p] is the summed rooted length."""
    c = catalan_series(order)
    cx = Series2.from_x(c, order)
    cells = {(k, k + 1): c.coeffs[k] for k in range(order // 2 + 1)}
    ycxy = Series2.from_cells(cells, order)
    one_minus_y = Series2([[1, -1]], order)
    g = (cx - ycxy) / one_minus_y
    return g * (g - 1)


def leaf_path_kernel(order: int = DEFAULT_ORDER) -> Series2:
    """x (1/(1 - 2xC)) Q^2 (2Q - 1) with Q the rooted-path kernel.

    [x^n y^s] is the summed leaf-to-leaf length at separation s + 1.  The
    leading x matters: without it every coefficient belongs to n + 1.
    The prefactor is built by division and checked against the central
    binomial expansion before use.
    """
    if order < 1:
        raise DomainError("leaf_path_kernel needs order >= 1")
    inner = order - 1
    c = catalan_series(inner)
    prefactor = 1 / (1 - 2 * c.shift(1).truncate(inner))
    if prefactor != central_binomial_series(inner):
        raise FormulaMismatch("1/(1 - 2xC) disagrees with the central binomial series")
    q = rooted_path_kernel(inner)
    return (Series2.from_x(prefactor, inner) * q * q * (2 * q - 1)).shift_x()


# ---------------------------------------------------------------------------
# Lagrange form


def _binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def lagrange_extract(n: int, s: int) -> int:
    """[xi^(n-s) zeta^s] of the u-variable form of the leaf-path kernel.

    The integrand is
        xi (1 - zeta^2) (1+xi)^(2a) (1+zeta)^(2s) (1 - w)^-2 [2(1+xi)(1+zeta)/(1-w) - 1]
    with a = n - s and w = xi zeta.  Expanding 1/(1-w)^2 = sum (k+1) w^k and
    1/(1-w)^3 = sum binom(k+2, 2) w^k leaves a finite sum of binomials.
    """
    if not 0 <= s < n:
        raise DomainError(f"lagrange_extract needs 0 <= s < n, got n={n}, s={s}")
    a = n - s
    total = 0
    for k in range(min(a - 1, s) + 1):
        zeta_odd = _binom(2 * s + 1, s - k) - _binom(2 * s + 1, s - k - 2)
        zeta_even = _binom(2 * s, s - k) - _binom(2 * s, s - k - 2)
        total += 2 * _binom(k + 2, 2) * _binom(2 * a + 1, a - 1 - k) * zeta_odd
        total -= (k + 1) * _binom(2 * a, a - 1 - k) * zeta_even
    return total


def lagrange_u_series(phi: Series1, order: int) -> Series1:
    """Solve u = x phi(u) by fixed-point iteration."""
    if phi.coeffs[0] != 1:
        raise DomainError("Lagrange inversion here expects phi(0) = 1")
    u = Series1.zero(order)
    for _ in range(order + 1):
        u = compose(phi, u).shift(1).truncate(order)
    return u


def lagrange_inversion_check(f: Series1, phi: Series1, n: int) -> tuple[Fraction, Fraction]:
    """([x^n] f(u(x)), (1/n)[u^(n-1)] f'(u) phi(u)^n) for u = x phi(u)."""
    if n < 1:
        raise DomainError("Lagrange inversion check needs n >= 1")
    if f.order < n or phi.order < n:
        raise DomainError(f"f and phi must be known through order {n}")
    u = lagrange_u_series(phi.truncate(n), n)
    lhs = compose(f.truncate(n), u).coeff(n)
    fp = f.truncate(n).derivative()
    rhs = (fp * phi.truncate(n - 1) ** n).coeff(n - 1) / n
    return lhs, rhs


def sum_out_check(a: Series2, n: int) -> tuple[Fraction, Fraction]:
    """(sum_r [x^r y^(n-r)] a, [x^n] a(x, x))."""
    if not 0 <= n <= a.order:
        raise DomainError(f"sum_out_check needs 0 <= n <= {a.order}, got {n}")
    lhs = sum((a.coeff(r, n - r) for r in range(n + 1)), Fraction(0))
    rhs = a.evaluate_y_at_x().coeff(n)
    return lhs, rhs


def catalan_triangle(rows: int) -> list[list[int]]:
    """Rows 0..rows-1 read off C(t)/(1 - s C(t)) by total degree.

    Row d lists [t^(d-j) s^j] for j = d, d-1, ..., 0.
    """
    order = rows - 1
    c = catalan_series(order)
    ct = Series2.from_x(c, order)
    sc = Series2([[0, c.coeffs[i]] for i in range(order + 1)], order)
    g = ct / (1 - sc)
    out = []
    for d in range(rows):
        row = []
        for j in range(d, -1, -1):
            v = g.coeff(d - j, j)
            if v.denominator != 1:
                raise FormulaMismatch("Catalan triangle entry is not an integer")
            row.append(v.numerator)
        out.append(row)
    return out


def dump_csv(a, path, newline: str = "\n") -> None:
    """Write coefficients as CSV: ``index,numerator,denominator`` or ``i,j,...``."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator=newline)
        if isinstance(a, Series1):
            w.writerow(["index", "numerator", "denominator"])
            for k, v in enumerate(a.coeffs):
                w.writerow([k, v.numerator, v.denominator])
        else:
            w.writerow(["i", "j", "numerator", "denominator"])
            for i, j, v in a.cells():
                w.writerow([i, j, v.numerator, v.denominator])
