"""Exact Catalan and Narayana numbers.

All arithmetic is done with Python integers, so results stay exact at every
size this package can enumerate (and far beyond).
"""

from __future__ import annotations

from functools import lru_cache
from math import comb


def narayana(n: int, k: int) -> int:
    """Number of noncrossing partitions of [n] with exactly k blocks.

    Computed as C(n,k) * C(n,k-1) / n, which is always an integer.

    >>> narayana(4, 2)
    6
    >>> [narayana(4, k) for k in range(1, 5)]
    [1, 6, 6, 1]
    >>> narayana(8, 4)
    490
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if not 1 <= k <= n:
        raise ValueError(f"k must be between 1 and {n}, got {k}")
    q, r = divmod(comb(n, k) * comb(n, k - 1), n)
    if r:
        raise ArithmeticError(f"narayana({n}, {k}) is not an integer")
    return q


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """n-th Catalan number, as the sum of the Narayana row.

    >>> catalan(4)
    14
    >>> catalan(12)
    208012
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return sum(narayana(n, k) for k in range(1, n + 1))
