"""Exact integer and rational combinatorial primitives.

Everything here returns Python ``int`` or :class:`fractions.Fraction`; floats
only appear in :func:`lovasz_root` when the root is irrational.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "factorial",
    "binom",
    "DerangementTable",
    "derangements",
    "derangement_count",
    "derangements_inclusion_exclusion",
    "gen_binom",
    "lovasz_root",
]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    return _factorial(n)


@lru_cache(maxsize=8192)
def _factorial(n: int) -> int:
    return math.factorial(n)


def binom(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n (also for negative n)."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class DerangementTable:
    """d_n, D_n = d_n + d_{n-1} and D'_n = d_n + 2 d_{n-1} for 0 <= n <= n_max.

    d_{-1} is taken to be 0, so ``D[0] == Dp[0] == 1``.
    """

    n_max: int
    d: tuple[int, ...]
    D: tuple[int, ...]
    Dp: tuple[int, ...]


def derangements(n_max: int) -> DerangementTable:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    d = [1, 0]
    for n in range(2, n_max + 1):
        d.append((n - 1) * (d[n - 1] + d[n - 2]))
    d = d[: n_max + 1]
    prev = [0] + d[:-1]
    D = tuple(a + b for a, b in zip(d, prev))
    Dp = tuple(a + 2 * b for a, b in zip(d, prev))
    return DerangementTable(n_max, tuple(d), D, Dp)


@lru_cache(maxsize=4096)
def derangement_count(n: int) -> int:
    """d_n by the recurrence; 0 for negative n."""
    if n < 0:
        return 0
    a, b = 1, 0  # d_0, d_1
    if n == 0:
        return a
    for m in range(2, n + 1):
        a, b = b, (m - 1) * (a + b)
    return b


def derangements_inclusion_exclusion(n: int) -> int:
    """n! * sum_{i<=n} (-1)^i / i!, evaluated exactly as sum (-1)^i n!/i!."""
    total = 0
    term = 1  # n!/n!
    for i in range(n, -1, -1):
        total += term if i % 2 == 0 else -term
        term *= i if i else 1
    return total


def gen_binom(x, r: int) -> Fraction:
    """x (x-1) ... (x-r+1) / r! for rational x."""
    if r < 0:
        raise ValueError("r must be non-negative")
    x = Fraction(x)
    num = Fraction(1)
    for i in range(r):
        num *= x - i
    return num / math.factorial(r)


def lovasz_root(t: int, r: int, rel_tol: float = 1e-12):
    """The real x >= r with gen_binom(x, r) == t.

    Returns a ``Fraction`` when x is an integer (t == C(m, r)), otherwise a
    float accurate to ``rel_tol`` relative precision.
    """
    if t < 1 or r < 1:
        raise ValueError("need t >= 1 and r >= 1")
    if r == 1:
        return Fraction(t)
    # integer bracket first: binom(m, r) is increasing in m >= r
    lo, hi = r, r + t
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if math.comb(mid, r) <= t:
            lo = mid
        else:
            hi = mid
    if math.comb(lo, r) == t:
        return Fraction(lo)
    a, b = Fraction(lo), Fraction(lo + 1)
    target = Fraction(t)
    while (b - a) > rel_tol * a:
        mid = (a + b) / 2
        # dyadic midpoints keep the denominators small
        if gen_binom(mid, r) <= target:
            a = mid
        else:
            b = mid
    return float((a + b) / 2)
