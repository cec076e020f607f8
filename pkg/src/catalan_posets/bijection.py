"""The recursive bijection between noncrossing partitions of [n] and
132-avoiding permutations of [n].

Writing k for the largest element of the block containing 1, a noncrossing
partition splits into that block, the blocks inside the interval (1, k),
and the blocks above k.  The image permutation places n at position k,
maps everything below k to the values above n - k (shifted recursively),
and everything above k to the values 1..n-k (recursively, unshifted).
The inverse reads k off as the position of n.
"""

from __future__ import annotations

from typing import Sequence

from .descent_sets import DescentSet
from .partitions import SetPartition, block_minima, is_noncrossing
from .permutations import check_permutation, is_132_avoiding

Blocks = tuple[tuple[int, ...], ...]


def _f(blocks: Blocks, m: int) -> tuple[int, ...]:
    # blocks is a canonical noncrossing partition of [m]
    if m == 0:
        return ()
    k = blocks[0][-1]
    head = blocks[0][:-1]
    left = ((head,) if head else ()) + tuple(b for b in blocks[1:] if b[0] < k)
    right = tuple(tuple(x - k for x in b) for b in blocks if b[0] > k)
    shift = m - k
    return (
        tuple(v + shift for v in _f(left, k - 1))
        + (m,)
        + _f(right, m - k)
    )


def _finv(perm: tuple[int, ...]) -> Blocks:
    m = len(perm)
    if m == 0:
        return ()
    k = perm.index(m) + 1
    shift = m - k
    left = _finv(tuple(v - shift for v in perm[: k - 1]))
    right = tuple(tuple(x + k for x in b) for b in _finv(perm[k:]))
    first = (left[0] if left else ()) + (k,)
    return (first,) + left[1:] + right


def ncp_to_perm(partition: SetPartition) -> tuple[int, ...]:
    """Map a noncrossing partition to its 132-avoiding permutation.

    >>> from .partitions import parse_partition
    >>> ncp_to_perm(parse_partition("{1,4,6}/{2,3}/{5}/{7,8}"))
    (6, 4, 5, 7, 3, 8, 1, 2)
    >>> ncp_to_perm(parse_partition("{1}/{2}/{3}"))
    (3, 2, 1)
    >>> ncp_to_perm(parse_partition("{1,2,3}"))
    (1, 2, 3)
    """
    if not is_noncrossing(partition):
        raise ValueError(f"partition {partition} is not noncrossing")
    return _f(partition.blocks, partition.n)


def perm_to_ncp(perm: Sequence[int]) -> SetPartition:
    """Map a 132-avoiding permutation back to its noncrossing partition.

    >>> str(perm_to_ncp((6, 4, 5, 7, 3, 8, 1, 2)))
    '{1,4,6}/{2,3}/{5}/{7,8}'
    """
    entries = check_permutation(perm)
    if not is_132_avoiding(entries):
        raise ValueError(f"permutation {entries} contains a 132 pattern")
    return SetPartition(len(entries), _finv(entries))


def partition_descent_set(partition: SetPartition) -> DescentSet:
    """Descent set of the image permutation, read off the partition directly:
    the descents are m - 1 for each block minimum m other than 1.

    >>> from .partitions import parse_partition
    >>> str(partition_descent_set(parse_partition("{1,4,6}/{2,3}/{5}/{7,8}")))
    '{1,4,6}'
    """
    mask = 0
    for m in block_minima(partition):
        if m > 1:
            mask |= 1 << (m - 2)
    return DescentSet(partition.n, mask)
