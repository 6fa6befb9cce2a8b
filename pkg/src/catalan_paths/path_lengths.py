"""Summed and average leaf-to-leaf path lengths S_n(r) and A_n(r).

The recursive route seeds S_n(r) = G_n(r) + 2 sum_a C_{n-a-1} S_a(r) with the
bulk + boundary inception G_n(r).  The inception reads depth values from the
master-equation table, so it shares nothing with the closed forms below.

Everything returns exact ints or Fractions except :func:`average_continuum`,
which is the only floating-point value in the package.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .catalan_core import catalan, catalan_ratio, register_cache
from .depth_formulas import depth_closed_form, depth_recursive, dp_bound
from .errors import DomainError, ResourceBoundError

__all__ = [
    "InceptionTerm",
    "AsymptoticQuery",
    "inception",
    "summed_length_recursive",
    "summed_length_closed",
    "average_length",
    "average_special",
    "average_limit",
    "average_continuum",
    "path_count",
]


@dataclass(frozen=True)
class InceptionTerm:
    n: int
    r: int
    bulk: int
    boundary: int
    value: int
    long_range: bool

    def __post_init__(self) -> None:
        if self.value != self.bulk + self.boundary:
            raise ValueError("inception value must equal bulk + boundary")


@dataclass(frozen=True)
class AsymptoticQuery:
    r: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise DomainError(f"need r >= 1, got {self.r}")


def _check_range(n: int, r: int) -> None:
    if n < 0 or not 1 <= r <= n:
        raise DomainError(f"r out of range: need 1 <= r <= n, got n={n}, r={r}")


def inception(n: int, r: int) -> InceptionTerm:
    """Bulk and boundary seed G_n(r) of the path-length recursion.

    Short range r <= (n+1)/2 (inclusive at the branch point):
        blk = sum_{a=r-1}^{n-r} sum_{b=0}^{r-1} (2 C_{n-a-1} D_{b+1,a} + C_a C_{n-a-1})
        bnd = 2 sum_{a=0}^{r-2} sum_{b=0}^{a} (C_{n-a-1} D_{b+1,a} + C_a D_{r-b,n-a-1} + C_a C_{n-a-1})
    Long range swaps r for n+1-r in the limits only.
    """
    _check_range(n, r)
    long_range = 2 * r > n + 1
    bulk, boundary = _inception_sums(n, r, long_range)
    return InceptionTerm(n, r, bulk, boundary, bulk + boundary, long_range)


def _inception_sums(n: int, r: int, long_range: bool) -> tuple[int, int]:
    D = depth_recursive
    C = catalan
    if long_range:
        bulk_alphas = range(n - r, r)
        bulk_betas = n - r + 1
        bnd_top = n - r - 1
    else:
        bulk_alphas = range(r - 1, n - r + 1)
        bulk_betas = r
        bnd_top = r - 2
    bulk = 0
    for a in bulk_alphas:
        ca, cb = C(a), C(n - a - 1)
        for b in range(bulk_betas):
            bulk += 2 * cb * D(b + 1, a) + ca * cb
    boundary = 0
    for a in range(bnd_top + 1):
        ca, cb = C(a), C(n - a - 1)
        for b in range(a + 1):
            boundary += cb * D(b + 1, a) + ca * D(r - b, n - a - 1) + ca * cb
    return bulk, 2 * boundary


_summed_cache: dict[tuple[int, int], int] = {}
register_cache(_summed_cache.clear)


def summed_length_recursive(n: int, r: int) -> int:
    """S_n(r) from the inception recursion; S_a(r) = 0 whenever a < r."""
    if r < 1:
        raise DomainError(f"need r >= 1, got {r}")
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    bound = dp_bound()
    if n > bound:
        raise ResourceBoundError(f"path-length recursion limited to n <= {bound} (got n={n})", bound)
    if n < r:
        return 0
    for nn in range(r, n + 1):
        if (nn, r) in _summed_cache:
            continue
        rec = 0
        for a in range(r, nn):
            rec += catalan(nn - a - 1) * _summed_cache[(a, r)]
        _summed_cache[(nn, r)] = inception(nn, r).value + 2 * rec
    return _summed_cache[(n, r)]


def summed_length_closed(n: int, r: int) -> int:
    """S_n(r) = (n+1-r) D_{r,n}."""
    _check_range(n, r)
    return (n + 1 - r) * depth_closed_form(r, n)


def path_count(n: int, r: int) -> int:
    """Number of (tree, leaf pair at separation r) instances: (n+1-r) C_n."""
    _check_range(n, r)
    return (n + 1 - r) * catalan(n)


def average_length(n: int, r: int) -> Fraction:
    """A_n(r) = 2r(r+1)(2n-2r+1)(2n-2r+3)/((n+1)(n+2)) C_r C_{n-r}/C_n - 1.

    C_{n-r}/C_n is formed as a ratio so very large n stays cheap.
    """
    _check_range(n, r)
    lead = Fraction(
        2 * r * (r + 1) * (2 * n - 2 * r + 1) * (2 * n - 2 * r + 3) * catalan(r),
        (n + 1) * (n + 2),
    )
    return lead * catalan_ratio(n, r) - 1


def average_special(n: int, r: int) -> Fraction:
    """The hand-simplified averages for r = 1..4."""
    _check_range(n, r)
    if r == 1:
        return Fraction(3 * n, n + 2)
    if r == 2:
        return Fraction(5 * n - 2, n + 2)
    if r == 3:
        return Fraction(13 * n * n - 18 * n + 2, (n + 2) * (2 * n - 1))
    if r == 4:
        return Fraction(n * (n * (31 * n - 105) + 83) - 6, 4 * n**3 - 13 * n + 6)
    raise DomainError(f"no special-case formula for r={r}")


def average_limit(r: int | AsymptoticQuery) -> Fraction:
    """A_inf(r) = 8 r (r+1) C_r / 4^r - 1."""
    q = r if isinstance(r, AsymptoticQuery) else AsymptoticQuery(r)
    r = q.r
    return Fraction(8 * r * (r + 1) * catalan(r), 4**r) - 1


def average_continuum(r: int) -> float:
    """sqrt(64 r / pi), the large-r asymptote of A_inf(r).

    This is an approximation, not an exact value: at r = 1 it gives 4.51
    against the exact limit 3.
    """
    if r < 1:
        raise DomainError(f"need r >= 1, got {r}")
    return math.sqrt(64 * r / math.pi)

