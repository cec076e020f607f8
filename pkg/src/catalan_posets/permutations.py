"""132-avoiding permutations: recognition, enumeration, descents.

Permutations are tuples of the values 1..n in one-line notation; positions
are 1-based throughout the public API.  A permutation contains the pattern
132 when there are positions i < j < k with p[i] < p[k] < p[j].
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .descent_sets import DescentSet
from .errors import CapacityError

#: Largest n accepted by enumerate_av132.  Enumeration is cached per level,
#: so this also bounds memory held by repeated calls.
MAX_ENUM_N = 12


def check_permutation(entries: Sequence[int]) -> tuple[int, ...]:
    """Validate one-line notation and return it as a tuple.

    >>> check_permutation([2, 1, 3])
    (2, 1, 3)
    """
    p = tuple(entries)
    n = len(p)
    if n == 0:
        raise ValueError("permutation must have at least one entry")
    seen = 0
    for x in p:
        if not isinstance(x, int) or not 1 <= x <= n:
            raise ValueError(f"entry {x!r} outside 1..{n}")
        bit = 1 << (x - 1)
        if seen & bit:
            raise ValueError(f"duplicate entry {x}")
        seen |= bit
    return p


def is_132_avoiding(entries: Sequence[int]) -> bool:
    """Linear-time avoidance test.

    Scans right to left keeping a decreasing stack of candidate middle
    values; ``threshold`` is the largest value known to sit to the right of
    some larger value, i.e. the best candidate for the final "2" of a
    pattern.  Any later (further-left) entry below it completes a 132.

    >>> is_132_avoiding((6, 4, 5, 7, 3, 8, 1, 2))
    True
    >>> is_132_avoiding((1, 3, 2))
    False
    """
    p = check_permutation(entries)
    stack: list[int] = []
    threshold = 0
    for x in reversed(p):
        if x < threshold:
            return False
        while stack and stack[-1] < x:
            threshold = stack.pop()
        stack.append(x)
    return True


def is_132_avoiding_bruteforce(entries: Sequence[int]) -> bool:
    """Cubic test straight from the pattern definition; oracle for the fast scan."""
    p = check_permutation(entries)
    n = len(p)
    for i in range(n):
        for j in range(i + 1, n):
            if p[i] >= p[j]:
                continue
            for k in range(j + 1, n):
                if p[i] < p[k] < p[j]:
                    return False
    return True


def descent_mask(entries: Sequence[int]) -> int:
    """Bit mask of descent positions (bit i-1 set iff p[i] > p[i+1])."""
    mask = 0
    for i in range(len(entries) - 1):
        if entries[i] > entries[i + 1]:
            mask |= 1 << i
    return mask


def descent_set(entries: Sequence[int]) -> DescentSet:
    """Positions i with p[i] > p[i+1].

    >>> descent_set((6, 4, 5, 7, 3, 8, 1, 2)).positions()
    (1, 4, 6)
    """
    p = check_permutation(entries)
    return DescentSet(len(p), descent_mask(p))


def left_to_right_minima_positions(entries: Sequence[int]) -> tuple[int, ...]:
    """Positions holding a value smaller than everything before it.

    Position 1 always qualifies.  For a 132-avoiding permutation these are
    exactly position 1 plus the successors of the descent positions.

    >>> left_to_right_minima_positions((6, 4, 5, 7, 3, 8, 1, 2))
    (1, 2, 5, 7)
    """
    p = check_permutation(entries)
    out = []
    running_min = len(p) + 1
    for j, x in enumerate(p, start=1):
        if x < running_min:
            out.append(j)
            running_min = x
    return tuple(out)


@lru_cache(maxsize=None)
def _av132_sorted(n: int) -> tuple[tuple[int, ...], ...]:
    # Every 132-avoider splits at the position of n: entries to the left of n
    # must all exceed entries to its right, so the left part uses the top
    # values and both parts are independently 132-avoiding.
    if n == 0:
        return ((),)
    out = []
    for k in range(1, n + 1):
        for left in _av132_sorted(k - 1):
            prefix = tuple(x + n - k for x in left) + (n,)
            for right in _av132_sorted(n - k):
                out.append(prefix + right)
    out.sort()
    return tuple(out)


def _check_enum_bound(n: int) -> None:
    if n < 1:
        raise CapacityError(f"n must be at least 1, got {n}")
    if n > MAX_ENUM_N:
        raise CapacityError(f"enumeration supports n up to {MAX_ENUM_N}, got {n}")


def enumerate_av132(n: int) -> Iterator[tuple[int, ...]]:
    """All 132-avoiding permutations of [n] in lexicographic order.

    The size bound is checked before the iterator is handed out.

    >>> list(enumerate_av132(3))
    [(1, 2, 3), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]
    """
    _check_enum_bound(n)
    return iter(_av132_sorted(n))


def format_permutation(entries: Sequence[int]) -> str:
    """Compact digit string for n <= 9, comma-separated beyond.

    >>> format_permutation((6, 4, 5, 7, 3, 8, 1, 2))
    '64573812'
    """
    p = check_permutation(entries)
    if len(p) <= 9:
        return "".join(str(x) for x in p)
    return ",".join(str(x) for x in p)


def parse_permutation(text: str) -> tuple[int, ...]:
    """Parse either rendering of format_permutation; rejects anything else.

    >>> parse_permutation("64573812")
    (6, 4, 5, 7, 3, 8, 1, 2)
    >>> parse_permutation("6,4,5,7,3,8,1,2")
    (6, 4, 5, 7, 3, 8, 1, 2)
    """
    if not text:
        raise ValueError("empty permutation text")
    if "," in text:
        parts = text.split(",")
        try:
            entries = tuple(int(part) for part in parts)
        except ValueError:
            raise ValueError(f"malformed permutation text: {text!r}") from None
    else:
        if not text.isdigit():
            raise ValueError(f"malformed permutation text: {text!r}")
        entries = tuple(int(ch) for ch in text)
    return check_permutation(entries)
