"""Exact Catalan numbers and the closed-form identities built on them.

All values are Python ints or :class:`fractions.Fraction`; nothing here
touches floating point.  The table is shared by every other module, so it
grows monotonically and is guarded by a lock while growing.
"""
from __future__ import annotations

import math
import threading
from contextlib import contextmanager
from fractions import Fraction
from typing import Callable, Iterator

from .errors import DomainError, FormulaMismatch

__all__ = [
    "CatalanTable",
    "catalan",
    "catalan_closed",
    "catalan_ratio",
    "segner_sum",
    "identity_r1",
    "identity_r2",
    "incomplete_segner",
    "incomplete_segner_direct",
    "incomplete_rautu",
    "incomplete_rautu_direct",
    "get_table",
    "use_table",
    "register_cache",
]


class CatalanTable:
    """Memoized C_0 ... C_N, grown on demand by C_{n+1} = C_n (4n+2)/(n+2)."""

    def __init__(self) -> None:
        self.values: list[int] = [1]
        self._lock = threading.Lock()

    @property
    def max_index(self) -> int:
        return len(self.values) - 1

    def ensure(self, n: int) -> None:
        if n <= self.max_index:
            return
        with self._lock:
            values = self.values
            k = len(values) - 1
            c = values[k]
            while k < n:
                c = c * (4 * k + 2) // (k + 2)
                k += 1
                values.append(c)

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise DomainError(f"Catalan index must be non-negative, got {n}")
        if n > self.max_index:
            self.ensure(n)
        return self.values[n]

    def prefix(self, n: int) -> list[int]:
        """C_0 ... C_n as a fresh list."""
        self.ensure(n)
        return self.values[: n + 1]

    @classmethod
    def corrupted(cls, index: int, delta: int = 1) -> "CatalanTable":
        """A table whose entry at ``index`` is off by ``delta``.

        Entries above ``index`` are grown from the corrupted value, so the
        error propagates the way a real arithmetic slip would.  Only used
        for fault-injection runs of the verifier.
        """
        table = cls()
        table.ensure(index)
        table.values[index] += delta
        return table


_table = CatalanTable()
_cache_clearers: list[Callable[[], None]] = []


def get_table() -> CatalanTable:
    return _table


def register_cache(clear: Callable[[], None]) -> None:
    """Register a callback that drops memoized values derived from the table."""
    _cache_clearers.append(clear)


def _clear_caches() -> None:
    for clear in _cache_clearers:
        clear()


@contextmanager
def use_table(table: CatalanTable) -> Iterator[CatalanTable]:
    """Temporarily route every Catalan lookup through ``table``."""
    global _table
    previous = _table
    _clear_caches()
    _table = table
    try:
        yield table
    finally:
        _table = previous
        _clear_caches()


def catalan(n: int) -> int:
    """Return C_n from the shared table."""
    return _table[n]


def catalan_closed(n: int) -> int:
    """C_n = (2n)! / ((n+1)! n!), evaluated independently of the table."""
    if n < 0:
        raise DomainError(f"Catalan index must be non-negative, got {n}")
    return math.comb(2 * n, n) // (n + 1)


# Above this index the ratio is formed as a short product instead of two
# table lookups; C_n has roughly 0.6 n decimal digits.
_RATIO_TABLE_LIMIT = 4096


def catalan_ratio(n: int, k: int) -> Fraction:
    """C_{n-k} / C_n as an exact fraction, 0 <= k <= n.

    For large n this uses C_{j-1}/C_j = (j+1)/(4j-2) so the cost is O(k)
    small-integer products rather than building C_n.
    """
    if not 0 <= k <= n:
        raise DomainError(f"catalan_ratio needs 0 <= k <= n, got n={n}, k={k}")
    if n <= _RATIO_TABLE_LIMIT or k > n // 2:
        return Fraction(catalan(n - k), catalan(n))
    num = 1
    den = 1
    for j in range(n - k + 1, n + 1):
        num *= j + 1
        den *= 4 * j - 2
    return Fraction(num, den)


def segner_sum(n: int) -> int:
    """sum_{a=0}^{n-1} C_a C_{n-1-a}; equals C_n for n >= 1."""
    if n < 1:
        raise DomainError("segner_sum is defined for n >= 1 (the n = 0 sum is empty)")
    c = _table.prefix(n - 1)
    return sum(c[a] * c[n - 1 - a] for a in range(n))


def identity_r1(n: int) -> tuple[int, int]:
    """(n+1) C_{n+1} against sum_q (2q+1) C_q C_{n-q}."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    c = _table.prefix(n + 1)
    lhs = (n + 1) * c[n + 1]
    rhs = sum((2 * q + 1) * c[q] * c[n - q] for q in range(n + 1))
    return lhs, rhs


def identity_r2(n: int) -> tuple[int, int]:
    """(2n+1) C_n against sum_q (q+1) C_q C_{n-q}."""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    c = _table.prefix(n)
    lhs = (2 * n + 1) * c[n]
    rhs = sum((q + 1) * c[q] * c[n - q] for q in range(n + 1))
    return lhs, rhs


def _as_count(value: Fraction, what: str) -> Fraction:
    if value.denominator != 1:
        raise FormulaMismatch(f"{what} evaluated to non-integer {value}")
    return value


def incomplete_segner(p: int, n: int) -> Fraction:
    """sum_{k=0}^{p} C_k C_{n-k} from its closed form.

    C_{n+1}/2 + (2p+1-n)(p+2)(n-p+1) / (2(n+1)(n+2)) * C_{p+1} C_{n-p}
    """
    if not 0 <= p <= n:
        raise DomainError(f"incomplete_segner needs 0 <= p <= n, got p={p}, n={n}")
    half = Fraction(catalan(n + 1), 2)
    tail = Fraction(
        (2 * p + 1 - n) * (p + 2) * (n - p + 1) * catalan(p + 1) * catalan(n - p),
        2 * (n + 1) * (n + 2),
    )
    return _as_count(half + tail, f"incomplete_segner({p}, {n})")


def incomplete_segner_direct(p: int, n: int) -> int:
    if not 0 <= p <= n:
        raise DomainError(f"incomplete_segner needs 0 <= p <= n, got p={p}, n={n}")
    return sum(catalan(k) * catalan(n - k) for k in range(p + 1))


def incomplete_rautu(p: int, n: int) -> Fraction:
    """sum_{k=0}^{p-1} (p-k) C_{n-k} C_k from its closed form.

    [(2n+1)(p+1)(n+1) C_n - (2p+1)(p+1) C_p (2(n-p)+1)(n-p+1) C_{n-p}]
    / ((n+1)(n+2)).  The empty sum at p = 0 is returned as 0.
    """
    if p < 0 or p > n:
        raise DomainError(f"incomplete_rautu needs 0 <= p <= n, got p={p}, n={n}")
    if p == 0:
        return Fraction(0)
    head = (2 * n + 1) * (p + 1) * (n + 1) * catalan(n)
    tail = (2 * p + 1) * (p + 1) * catalan(p) * (2 * (n - p) + 1) * (n - p + 1) * catalan(n - p)
    value = Fraction(head - tail, (n + 1) * (n + 2))
    return _as_count(value, f"incomplete_rautu({p}, {n})")


def incomplete_rautu_direct(p: int, n: int) -> int:
    if p < 0 or p > n:
        raise DomainError(f"incomplete_rautu needs 0 <= p <= n, got p={p}, n={n}")
    return sum((p - k) * catalan(n - k) * catalan(k) for k in range(p))
