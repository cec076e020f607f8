"""Set partitions of [n] in canonical form, and the noncrossing ones.

Canonical form: each block is an increasing tuple, blocks are ordered by
their minima.  Two blocks cross when some a < b < c < d has a, c in one
block and b, d in the other; a partition with no crossing pair is
noncrossing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import CapacityError

#: Largest n accepted by enumerate_ncp.
MAX_ENUM_N = 12


@dataclass(frozen=True)
class SetPartition:
    """A partition of {1, ..., n} stored in canonical form.

    The constructor insists on canonical form; use from_blocks to build one
    from blocks in any order.

    >>> q = SetPartition.from_blocks([(2, 3), (1, 4, 6), (7, 8), (5,)])
    >>> q.blocks
    ((1, 4, 6), (2, 3), (5,), (7, 8))
    >>> q.n
    8
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        seen = 0
        previous_min = 0
        for block in self.blocks:
            if not block:
                raise ValueError("empty block")
            if block[0] <= previous_min:
                raise ValueError("blocks must be ordered by strictly increasing minima")
            previous_min = block[0]
            last = 0
            for x in block:
                if not isinstance(x, int) or not 1 <= x <= self.n:
                    raise ValueError(f"element {x!r} outside 1..{self.n}")
                if x <= last:
                    raise ValueError(f"block {block} is not strictly increasing")
                last = x
                bit = 1 << (x - 1)
                if seen & bit:
                    raise ValueError(f"element {x} appears in two blocks")
                seen |= bit
        if seen != (1 << self.n) - 1:
            raise ValueError(f"blocks do not cover 1..{self.n}")

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> SetPartition:
        """Canonicalize arbitrary block order and validate."""
        canonical = tuple(sorted(tuple(sorted(block)) for block in blocks))
        if n is None:
            n = sum(len(block) for block in canonical)
        return cls(n, canonical)

    def block_containing(self, x: int) -> tuple[int, ...]:
        for block in self.blocks:
            if x in block:
                return block
        raise ValueError(f"element {x} outside 1..{self.n}")

    def __str__(self) -> str:
        return format_partition(self)


def block_minima(partition: SetPartition) -> tuple[int, ...]:
    """Smallest element of each block, in increasing order.

    >>> block_minima(SetPartition.from_blocks([(1, 4, 6), (2, 3), (5,), (7, 8)]))
    (1, 2, 5, 7)
    """
    return tuple(block[0] for block in partition.blocks)


def is_noncrossing(partition: SetPartition) -> bool:
    """Linear-time crossing test via a stack of open blocks.

    Scanning 1..n, a block is open from its minimum to its maximum.  The
    partition is noncrossing exactly when every element belongs to the most
    recently opened block that is still open.

    >>> is_noncrossing(SetPartition.from_blocks([(1, 4, 6), (2, 3), (5,), (7, 8)]))
    True
    >>> is_noncrossing(SetPartition.from_blocks([(1, 3), (2, 4)]))
    False
    """
    owner = {}
    for index, block in enumerate(partition.blocks):
        for x in block:
            owner[x] = index
    stack: list[int] = []
    for x in range(1, partition.n + 1):
        b = owner[x]
        block = partition.blocks[b]
        if x == block[0]:
            stack.append(b)
        elif stack[-1] != b:
            return False
        if x == block[-1]:
            stack.pop()
    return True


def is_noncrossing_bruteforce(partition: SetPartition) -> bool:
    """Quadruple scan straight from the definition; oracle for the stack test."""
    owner = {}
    for index, block in enumerate(partition.blocks):
        for x in block:
            owner[x] = index
    for a, b, c, d in combinations(range(1, partition.n + 1), 4):
        if owner[a] == owner[c] and owner[b] == owner[d] and owner[a] != owner[b]:
            return False
    return True


def enumerate_ncp(n: int) -> Iterator[SetPartition]:
    """All noncrossing partitions of [n], ordered by their restricted growth
    strings (the block index of 1, 2, ..., n in turn), lexicographically.

    The search carries the open-block stack, so only noncrossing partial
    assignments are ever visited: element x may join any open block, which
    closes every block opened after it, or start a new block.

    The size bound is checked before the iterator is handed out.

    >>> [str(q) for q in enumerate_ncp(3)]
    ['{1,2,3}', '{1,2}/{3}', '{1,3}/{2}', '{1}/{2,3}', '{1}/{2}/{3}']
    """
    if n < 1:
        raise CapacityError(f"n must be at least 1, got {n}")
    if n > MAX_ENUM_N:
        raise CapacityError(f"enumeration supports n up to {MAX_ENUM_N}, got {n}")
    return _stream_ncp(n)


def _stream_ncp(n: int) -> Iterator[SetPartition]:
    blocks: list[list[int]] = []
    stack: list[int] = []

    def extend(x: int) -> Iterator[SetPartition]:
        if x > n:
            yield SetPartition(n, tuple(tuple(block) for block in blocks))
            return
        # open blocks carry increasing indices from stack bottom to top, so
        # scanning the stack bottom-up tries block indices in increasing
        # order, which is lexicographic order on the growth string
        for depth in range(len(stack)):
            target = stack[depth]
            suspended = stack[depth + 1 :]
            del stack[depth + 1 :]
            blocks[target].append(x)
            yield from extend(x + 1)
            blocks[target].pop()
            stack.extend(suspended)
        blocks.append([x])
        stack.append(len(blocks) - 1)
        yield from extend(x + 1)
        stack.pop()
        blocks.pop()

    yield from extend(1)


def format_partition(partition: SetPartition) -> str:
    """Render canonical blocks as ``{1,4,6}/{2,3}/{5}/{7,8}``."""
    return "/".join(
        "{" + ",".join(str(x) for x in block) + "}" for block in partition.blocks
    )


def parse_partition(text: str) -> SetPartition:
    """Parse the format_partition rendering; blocks may come in any order.

    >>> parse_partition("{2,3}/{1,4,6}/{5}/{7,8}").blocks
    ((1, 4, 6), (2, 3), (5,), (7, 8))
    """
    if not text:
        raise ValueError("empty partition text")
    blocks = []
    for chunk in text.split("/"):
        if not (chunk.startswith("{") and chunk.endswith("}")) or len(chunk) < 3:
            raise ValueError(f"malformed block text: {chunk!r}")
        try:
            blocks.append([int(part) for part in chunk[1:-1].split(",")])
        except ValueError:
            raise ValueError(f"malformed block text: {chunk!r}") from None
    return SetPartition.from_blocks(blocks)
