"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 domain error (bad
arguments included), 3 resource bound exceeded, 4 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import sys
from decimal import ROUND_FLOOR, ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .catalan_core import CatalanTable, catalan, use_table
from .errors import DomainError, ResourceBoundError
from .path_lengths import (
    average_length,
    average_limit,
    path_count,
    summed_length_closed,
    summed_length_recursive,
)
from .series_engine import DEFAULT_ORDER, leaf_path_kernel, rooted_path_kernel
from .tree_oracle import oracle_path_stats
from .verify import SUITES, run_checks, suite_checks

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_DOMAIN = 2
EXIT_BOUND = 3
EXIT_IO = 4

DEFAULT_FIGURE_N = "50,100,200,5000,10000,20000"
MAX_DECIMALS = 50
_TIE_GUARD = Decimal("1e-20")


# ---------------------------------------------------------------------------
# decimal rendering


def render_fraction(x: Fraction, decimals: int) -> str:
    """Fixed-point string of x rounded half-to-even, computed exactly."""
    q = round(x, decimals)
    with localcontext() as ctx:
        ctx.prec = len(str(abs(q.numerator))) + decimals + 10
        d = Decimal(q.numerator) / Decimal(q.denominator)
        return format(d.quantize(Decimal(1).scaleb(-decimals), rounding=ROUND_HALF_EVEN), "f")


def _check_decimals(decimals: int) -> None:
    if not 0 <= decimals <= MAX_DECIMALS:
        raise DomainError(f"decimals must lie in 0..{MAX_DECIMALS}, got {decimals}")


# ---------------------------------------------------------------------------
# commands


def cmd_catalan(n: int) -> str:
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    return "\n".join(str(catalan(k)) for k in range(n + 1))


def _series_stats(n: int, r: int, order: int) -> tuple[int, int]:
    s = r - 1
    need = n + s
    if need > order:
        raise ResourceBoundError(
            f"series method needs truncation order >= n + r - 1 = {need}; limit is --order {order}", order
        )
    kernel = leaf_path_kernel(max(need, 1))
    rooted = rooted_path_kernel(max(need, 1))
    total = kernel.coeff(n, s)
    count = (n - s) * rooted.coeff(n, s)
    return int(total), int(count)


def cmd_avg(n: int, r: int, method: str, decimals: int = 10, order: int = DEFAULT_ORDER) -> str:
    _check_decimals(decimals)
    if n < 0 or not 1 <= r <= n:
        raise DomainError(f"r out of range: need 1 <= r <= n, got n={n}, r={r}")
    if method == "closed":
        total, count = summed_length_closed(n, r), path_count(n, r)
    elif method == "recursive":
        total, count = summed_length_recursive(n, r), path_count(n, r)
    elif method == "oracle":
        st = oracle_path_stats(n, r)
        total, count = st.sum, st.count
    elif method == "series":
        total, count = _series_stats(n, r, order)
    else:
        raise DomainError(f"unknown method {method!r}")
    avg = Fraction(total, count)
    return f"S={total} count={count} A={avg.numerator}/{avg.denominator} (~{render_fraction(avg, decimals)})"


def _figure_column(n: int, rmax: int, decimals: int) -> list[str]:
    """A_n(r) for r = 1..min(rmax, n), rendered to ``decimals`` places.

    The product C_r C_{n-r}/C_n is carried by its step ratio
        T(r+1)/T(r) = (4r+2)(n-r+1) / ((r+2)(4n-4r-2))
    in Decimal arithmetic with guard digits.  Values that land too close
    to a rounding tie are recomputed exactly.
    """
    top = min(rmax, n)
    out = []
    quantum = Decimal(1).scaleb(-decimals)
    with localcontext() as ctx:
        ctx.prec = decimals + 40
        t = Decimal(1)
        for r in range(1, top + 1):
            t = t * (4 * r - 2) * (n - r + 2) / ((r + 1) * (4 * n - 4 * r + 2))
            lead = Decimal(2 * r * (r + 1) * (2 * n - 2 * r + 1) * (2 * n - 2 * r + 3)) / ((n + 1) * (n + 2))
            value = lead * t - 1
            out.append(_round_guarded(value, quantum, decimals, lambda r=r: average_length(n, r)))
    return out


def _limit_column(rmax: int, decimals: int) -> list[str]:
    """A_inf(r) = 8 r (r+1) C_r / 4^r - 1 with U(r) = C_r / 4^r stepped by (4r-2)/(4(r+1))."""
    out = []
    quantum = Decimal(1).scaleb(-decimals)
    with localcontext() as ctx:
        ctx.prec = decimals + 40
        u = Decimal(1)
        for r in range(1, rmax + 1):
            u = u * (4 * r - 2) / (4 * (r + 1))
            value = 8 * r * (r + 1) * u - 1
            out.append(_round_guarded(value, quantum, decimals, lambda r=r: average_limit(r)))
    return out


def _round_guarded(value: Decimal, quantum: Decimal, decimals: int, exact) -> str:
    scaled = value.scaleb(decimals)
    frac = scaled - scaled.to_integral_value(rounding=ROUND_FLOOR)
    # the stepped product carries roughly r ulps of error at decimals + 40 digits
    if abs(frac - Decimal("0.5")) < _TIE_GUARD:
        return render_fraction(exact(), decimals)
    return format(value.quantize(quantum, rounding=ROUND_HALF_EVEN), "f")


def parse_n_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise DomainError(f"--n expects comma-separated integers, got {text!r}") from exc
    if not values:
        raise DomainError("--n needs at least one value")
    if any(v < 1 for v in values):
        raise DomainError("every n in --n must be >= 1")
    return values


def figure_rows(n_values: Sequence[int], rmax: Optional[int] = None, decimals: int = 12) -> list[list[str]]:
    """Header plus one row per r; cells with r > n are left empty."""
    _check_decimals(decimals)
    if not n_values:
        raise DomainError("need at least one n")
    top = max(n_values) if rmax is None else rmax
    if top < 1:
        raise DomainError(f"--rmax must be >= 1, got {top}")
    columns = [_figure_column(n, top, decimals) for n in n_values]
    limit = _limit_column(top, decimals)
    rows = [["r"] + [str(n) for n in n_values] + ["inf"]]
    for r in range(1, top + 1):
        rows.append([str(r)] + [col[r - 1] if r <= len(col) else "" for col in columns] + [limit[r - 1]])
    return rows


def cmd_figure_afinal(n_values: Sequence[int], rmax: Optional[int], out_path: str, decimals: int = 12) -> int:
    rows = figure_rows(n_values, rmax, decimals)
    with open(out_path, "w", encoding="utf-8", newline="") as fh:
        csv.writer(fh, lineterminator="\n").writerows(rows)
    return len(rows) - 1


def cmd_verify(suite: str, order: Optional[int], nmax: Optional[int], corrupt: Optional[int] = None) -> tuple[int, str]:
    def run() -> list:
        return run_checks(suite_checks(suite, order, nmax))

    if corrupt is not None:
        with use_table(CatalanTable.corrupted(corrupt)):
            results = run()
    else:
        results = run()
    lines = [res.line() for res in results]
    failed = sum(not res.passed for res in results)
    lines.append(f"{suite}: {len(results) - failed}/{len(results)} passed")
    return (EXIT_VERIFY if failed else EXIT_OK), "\n".join(lines)


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2 as well; keep the prefix uniform
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="catalan-paths",
        description="Exact leaf-to-leaf path statistics on ordered Catalan trees.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("catalan", help="print C_0 .. C_N, one per line")
    p.add_argument("N", type=int)

    p = sub.add_parser("avg", help="summed and average path length at separation r")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--method", choices=["closed", "recursive", "oracle", "series"], default="closed")
    p.add_argument("--decimals", type=int, default=10)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER, help="series truncation limit")

    p = sub.add_parser("figure-afinal", help="CSV of A_n(r) against r, plus the n -> infinity column")
    p.add_argument("--n", default=DEFAULT_FIGURE_N, help="comma-separated list (default %(default)s)")
    p.add_argument("--rmax", type=int, default=None, help="largest r (default: the largest n)")
    p.add_argument("--out", required=True)
    p.add_argument("--decimals", type=int, default=12)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--nmax", type=int, default=None)
    # fault injection: perturb C_k by one before running the suite
    p.add_argument("--corrupt-catalan", type=int, default=None, help=argparse.SUPPRESS)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "catalan":
            print(cmd_catalan(args.N))
        elif args.command == "avg":
            print(cmd_avg(args.n, args.r, args.method, args.decimals, args.order))
        elif args.command == "figure-afinal":
            count = cmd_figure_afinal(parse_n_list(args.n), args.rmax, args.out, args.decimals)
            print(f"wrote {count} rows to {args.out}")
        elif args.command == "verify":
            code, report = cmd_verify(args.suite, args.order, args.nmax, args.corrupt_catalan)
            print(report)
            return code
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
