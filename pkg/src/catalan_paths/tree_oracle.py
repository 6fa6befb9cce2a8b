"""Brute-force ground truth over every ordered full binary tree.

A tree is either ``None`` (a leaf) or a pair ``(left, right)`` of trees.
Subtrees are shared between enumerated shapes, so never rely on object
identity to tell two nodes apart.

Two independent measuring routes live here.  The per-tree functions
(:func:`leaf_depths`, :func:`path_length`) walk a single shape.  The bulk
aggregates build integer depth profiles for the whole ensemble with numpy
and reduce them; they never touch the closed forms or the Catalan table.
"""
from __future__ import annotations

import functools
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Tuple, Union

import numpy as np

from .catalan_core import catalan
from .errors import DomainError, ResourceBoundError

Tree = Union[None, Tuple["Tree", "Tree"]]

ENUM_BOUND_ENV = "CATALAN_PATHS_ENUM_BOUND"
PAIR_BOUND_ENV = "CATALAN_PATHS_PAIR_BOUND"
DEFAULT_ENUM_BOUND = 16
DEFAULT_PAIR_BOUND = 12

__all__ = [
    "Tree",
    "PathStats",
    "enumeration_bound",
    "pair_bound",
    "enumerate_trees",
    "internal_count",
    "leaf_count",
    "mirror",
    "leaf_depths",
    "gap_depths",
    "path_length",
    "path_length_by_gaps",
    "oracle_depth_sum",
    "oracle_depth_row",
    "oracle_path_stats",
    "naive_path_stats",
    "to_parens",
    "from_parens",
    "sample_random_tree",
]


def _env_bound(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise DomainError(f"{name} must be an integer, got {raw!r}") from exc
    if value < 0:
        raise DomainError(f"{name} must be non-negative, got {value}")
    return value


def enumeration_bound() -> int:
    """Largest n for which exhaustive enumeration is allowed."""
    return _env_bound(ENUM_BOUND_ENV, DEFAULT_ENUM_BOUND)


def pair_bound() -> int:
    """Largest n for the pairwise path-length oracle."""
    return _env_bound(PAIR_BOUND_ENV, DEFAULT_PAIR_BOUND)


def _check_bound(n: int, bound: int, what: str) -> None:
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if n > bound:
        raise ResourceBoundError(f"{what} limited to n <= {bound} (got n={n})", bound)


@dataclass(frozen=True)
class PathStats:
    """Summed and average leaf-to-leaf path length at one separation."""

    n: int
    r: int
    sum: int
    count: int
    avg: Fraction

    def __post_init__(self) -> None:
        if self.avg * self.count != self.sum:
            raise ValueError("PathStats requires avg * count == sum")


# ---------------------------------------------------------------------------
# Enumeration

# Lists are kept for small sizes only; C_11 = 58786 shapes.
_MEMO_LIST_MAX = 11


@functools.lru_cache(maxsize=None)
def _tree_list(n: int) -> tuple:
    if n == 0:
        return (None,)
    out = []
    for alpha in range(n):
        rights = _tree_list(n - 1 - alpha)
        for left in _tree_list(alpha):
            for right in rights:
                out.append((left, right))
    return tuple(out)


def _tree_stream(n: int) -> Iterator[Tree]:
    if n <= _MEMO_LIST_MAX:
        yield from _tree_list(n)
        return
    for alpha in range(n):
        for left in _tree_stream(alpha):
            for right in _tree_stream(n - 1 - alpha):
                yield (left, right)


def enumerate_trees(n: int) -> Iterator[Tree]:
    """Yield all C_n shapes with n internal vertices.

    Order: left-subtree size ascending; within a size, every left shape in
    its own enumeration order paired with every right shape in order.
    """
    _check_bound(n, enumeration_bound(), "tree enumeration")
    return _tree_stream(n)


# ---------------------------------------------------------------------------
# Per-tree measurements


def internal_count(t: Tree) -> int:
    count = 0
    stack = [t]
    while stack:
        node = stack.pop()
        if node is not None:
            count += 1
            stack.append(node[0])
            stack.append(node[1])
    return count


def leaf_count(t: Tree) -> int:
    return internal_count(t) + 1


def mirror(t: Tree) -> Tree:
    """Swap left and right children everywhere."""
    # post-order rebuild so deep combs do not hit the recursion limit
    stack: list = [(t, False)]
    built: list = []
    while stack:
        node, expanded = stack.pop()
        if node is None:
            built.append(None)
        elif expanded:
            right = built.pop()
            left = built.pop()
            built.append((right, left))
        else:
            stack.append((node, True))
            stack.append((node[1], False))
            stack.append((node[0], False))
    return built[0]


def _walk(t: Tree) -> tuple[list[int], list[int], list[str]]:
    """In-order walk returning leaf depths, gap depths and leaf direction codes.

    Gap k is the internal vertex sitting between leaves k and k+1 in
    left-to-right order; its depth counts internal vertices root-inclusive.
    """
    leaves: list[int] = []
    gaps: list[int] = []
    codes: list[str] = []
    # entries: (node, depth of node if internal, path code, state)
    stack: list = [(t, 1, "", 0)]
    while stack:
        node, depth, code, state = stack.pop()
        if node is None:
            leaves.append(depth - 1)
            codes.append(code)
        elif state == 0:
            stack.append((node, depth, code, 1))
            stack.append((node[0], depth + 1, code + "0", 0))
        else:
            gaps.append(depth)
            stack.append((node[1], depth + 1, code + "1", 0))
    return leaves, gaps, codes


def leaf_depths(t: Tree) -> list[int]:
    """Number of internal vertices from each leaf up to the root, left to right."""
    return _walk(t)[0]


def gap_depths(t: Tree) -> list[int]:
    return _walk(t)[1]


def _check_pair(n_leaves: int, a: int, b: int) -> None:
    if not 1 <= a < b <= n_leaves:
        raise DomainError(f"need 1 <= a < b <= {n_leaves}, got a={a}, b={b}")


def path_length(t: Tree, a: int, b: int) -> int:
    """Internal vertices on the path between leaves a < b (1-based).

    Uses the lowest common ancestor found from the two root paths:
    l = depth(a) + depth(b) - 2 depth(lca) + 1.
    """
    depths, _, codes = _walk(t)
    _check_pair(len(depths), a, b)
    pa, pb = codes[a - 1], codes[b - 1]
    k = 0
    while k < len(pa) and k < len(pb) and pa[k] == pb[k]:
        k += 1
    lca_depth = k + 1
    return depths[a - 1] + depths[b - 1] - 2 * lca_depth + 1


def path_length_by_gaps(t: Tree, a: int, b: int) -> int:
    """Same quantity via the shallowest gap vertex between the two leaves."""
    depths, gaps, _ = _walk(t)
    _check_pair(len(depths), a, b)
    lca_depth = min(gaps[a - 1 : b - 1])
    return depths[a - 1] + depths[b - 1] - 2 * lca_depth + 1


# ---------------------------------------------------------------------------
# Ensemble profiles
#
# profile(n) is a pair of int8 matrices with one row per tree in enumeration
# order: leaf depths (n+1 columns) and gap depths (n columns).  They are built
# by the same Segner split as the enumeration, so row i describes the i-th
# tree yielded by enumerate_trees(n).

_PROFILE_MEMO_MAX = 13
_BLOCK_ROWS = 1 << 21


@functools.lru_cache(maxsize=None)
def _profile(n: int) -> tuple[np.ndarray, np.ndarray]:
    if n == 0:
        return np.zeros((1, 1), dtype=np.int8), np.zeros((1, 0), dtype=np.int8)
    leaf_parts = []
    gap_parts = []
    for alpha in range(n):
        for leaf, gap in _combine(_profile(alpha), _profile(n - 1 - alpha)):
            leaf_parts.append(leaf)
            gap_parts.append(gap)
    leaf = np.concatenate(leaf_parts)
    gap = np.concatenate(gap_parts)
    leaf.setflags(write=False)
    gap.setflags(write=False)
    return leaf, gap


def _combine(left, right) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    l_leaf, l_gap = left
    r_leaf, r_gap = right
    lr, rr = l_leaf.shape[0], r_leaf.shape[0]
    step = max(1, _BLOCK_ROWS // rr)
    for start in range(0, lr, step):
        ll = l_leaf[start : start + step]
        lg = l_gap[start : start + step]
        rows = ll.shape[0]
        leaf = np.hstack([np.repeat(ll, rr, axis=0), np.tile(r_leaf, (rows, 1))]) + 1
        root = np.ones((rows * rr, 1), dtype=np.int8)
        gap = np.hstack([np.repeat(lg, rr, axis=0) + 1, root, np.tile(r_gap, (rows, 1)) + 1])
        yield leaf.astype(np.int8, copy=False), gap.astype(np.int8, copy=False)


def _profile_blocks(n: int) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    if n <= _PROFILE_MEMO_MAX:
        yield _profile(n)
        return
    for alpha in range(n):
        for left in _profile_blocks(alpha):
            for right in _profile_blocks(n - 1 - alpha):
                yield from _combine(left, right)


def oracle_depth_row(n: int) -> list[int]:
    """[D_{1,n}, ..., D_{n+1,n}] by summing leaf depths over every tree."""
    _check_bound(n, enumeration_bound(), "depth oracle")
    totals = np.zeros(n + 1, dtype=np.int64)
    for leaf, _ in _profile_blocks(n):
        totals += leaf.sum(axis=0, dtype=np.int64)
    return [int(v) for v in totals]


def oracle_depth_sum(m: int, n: int) -> int:
    """D_{m,n}: depth of leaf m summed over all C_n trees."""
    if n < 0 or not 1 <= m <= n + 1:
        raise DomainError(f"need 1 <= m <= n+1, got m={m}, n={n}")
    return oracle_depth_row(n)[m - 1]


def _stats(n: int, r: int, total: int, count: int) -> PathStats:
    avg = Fraction(total, count) if count else Fraction(0)
    return PathStats(n=n, r=r, sum=total, count=count, avg=avg)


def _check_separation(n: int, r: int) -> None:
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if not 1 <= r <= n + 1:
        raise DomainError(f"r out of range: need 1 <= r <= n+1, got r={r}, n={n}")


def oracle_path_stats(n: int, r: int) -> PathStats:
    """Sum of path lengths over all trees and all leaf pairs (m, m+r).

    r = n+1 has no pairs and returns zero statistics.
    """
    _check_separation(n, r)
    if r == n + 1:
        return _stats(n, r, 0, 0)
    _check_bound(n, pair_bound(), "path-length oracle")
    total = 0
    count = 0
    for leaf, gap in _profile_blocks(n):
        rows = leaf.shape[0]
        # sliding minimum of r consecutive gaps
        window = gap[:, : n + 1 - r].copy()
        for k in range(1, r):
            np.minimum(window, gap[:, k : k + n + 1 - r], out=window)
        lengths = (
            leaf[:, : n + 1 - r].astype(np.int64)
            + leaf[:, r:]
            - 2 * window.astype(np.int64)
            + 1
        )
        total += int(lengths.sum())
        count += rows * (n + 1 - r)
    return _stats(n, r, total, count)


def naive_path_stats(n: int, r: int) -> PathStats:
    """Tree-by-tree version of :func:`oracle_path_stats` (slow, for cross-checks)."""
    _check_separation(n, r)
    if r == n + 1:
        return _stats(n, r, 0, 0)
    _check_bound(n, pair_bound(), "path-length oracle")
    total = 0
    count = 0
    for t in enumerate_trees(n):
        for a in range(1, n + 2 - r):
            total += path_length(t, a, a + r)
            count += 1
    return _stats(n, r, total, count)


# ---------------------------------------------------------------------------
# Parentheses codec
#
# Preorder grammar:  T := ')' | '(' T T
# '(' opens an internal vertex, ')' marks a leaf.  A tree with n internal
# vertices encodes to n '(' followed in total by n+1 ')'.


def to_parens(t: Tree) -> str:
    out = []
    stack = [t]
    while stack:
        node = stack.pop()
        if node is None:
            out.append(")")
        else:
            out.append("(")
            stack.append(node[1])
            stack.append(node[0])
    return "".join(out)


def from_parens(text: str) -> Tree:
    """Inverse of :func:`to_parens`; rejects anything outside the grammar."""
    # frames: [left child or sentinel]; a frame completes after two children
    pending = object()
    frames: list[list] = []
    result: Optional[list] = None
    for pos, ch in enumerate(text):
        if result is not None:
            raise DomainError(f"trailing characters at position {pos}")
        if ch == "(":
            frames.append([pending])
            continue
        if ch != ")":
            raise DomainError(f"unexpected character {ch!r} at position {pos}")
        node: Tree = None
        while True:
            if not frames:
                result = [node]
                break
            top = frames[-1]
            if top[0] is pending:
                top[0] = node
                break
            frames.pop()
            node = (top[0], node)
    if result is None:
        raise DomainError("unterminated tree encoding")
    return result[0]


# ---------------------------------------------------------------------------
# Uniform sampling


def sample_random_tree(n: int, seed: int) -> Tree:
    """Uniform random shape with n internal vertices, reproducible from seed.

    Each split picks left size a with probability C_a C_{k-1-a} / C_k using
    exact integer weights, so the distribution is exactly uniform.
    """
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    rng = random.Random(seed)
    out = []
    stack = [n]
    while stack:
        k = stack.pop()
        if k == 0:
            out.append(")")
            continue
        u = rng.randrange(catalan(k))
        alpha = 0
        while True:
            w = catalan(alpha) * catalan(k - 1 - alpha)
            if u < w:
                break
            u -= w
            alpha += 1
        out.append("(")
        stack.append(k - 1 - alpha)
        stack.append(alpha)
    return from_parens("".join(out))
