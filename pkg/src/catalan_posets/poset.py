"""Graded partial orders on two families counted by the Catalan numbers.

The descent order on 132-avoiding permutations puts x strictly below y
when the descent set of x is properly contained in that of y; two distinct
permutations with the same descent set are incomparable.  The refinement
order on noncrossing partitions puts a below b when every block of a lies
inside a block of b.  Ranks are |descent set| and n - #blocks.

Orders are stored as bitset rows over a fixed element ordering, which
keeps reachability, cover and antichain computations in whole-row integer
arithmetic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import CapacityError
from .partitions import SetPartition, enumerate_ncp, format_partition
from .permutations import (
    check_permutation,
    descent_mask,
    enumerate_av132,
    format_permutation,
)

#: Largest n for which the poset builders will run.
MAX_POSET_N = 9


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of set bits, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def descent_leq(p: Sequence[int], q: Sequence[int]) -> bool:
    """Descent order: equal, or descent set properly inside the other's.

    >>> descent_leq((2, 1, 3, 4), (3, 2, 1, 4))
    True
    >>> descent_leq((2, 1, 3, 4), (1, 3, 2, 4))
    False
    >>> descent_leq((2, 1, 3, 4), (3, 1, 2, 4))   # same descent set
    False
    """
    a = check_permutation(p)
    b = check_permutation(q)
    if len(a) != len(b):
        raise ValueError(f"cannot compare permutations of [{len(a)}] and [{len(b)}]")
    if a == b:
        return True
    da = descent_mask(a)
    db = descent_mask(b)
    return da != db and da & db == da


def refinement_leq(a: SetPartition, b: SetPartition) -> bool:
    """Refinement order: every block of a lies inside a block of b.

    >>> from .partitions import parse_partition
    >>> refinement_leq(parse_partition("{1}/{2,3}"), parse_partition("{1,2,3}"))
    True
    >>> refinement_leq(parse_partition("{1,2}/{3}"), parse_partition("{1}/{2,3}"))
    False
    """
    if a.n != b.n:
        raise ValueError(f"cannot compare partitions of [{a.n}] and [{b.n}]")
    owner = {}
    for index, block in enumerate(b.blocks):
        for x in block:
            owner[x] = index
    return all(owner[block[0]] == owner[x] for block in a.blocks for x in block)


@dataclass(frozen=True)
class GradedPoset:
    """A finite graded poset over a fixed tuple of elements.

    leq_rows[i] has bit j set when element i is below-or-equal element j;
    cover_rows[i] has bit j set when j covers i.
    """

    family: str
    n: int
    elements: tuple
    ranks: tuple[int, ...]
    leq_rows: tuple[int, ...]
    cover_rows: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def height(self) -> int:
        return max(self.ranks) + 1

    def leq(self, i: int, j: int) -> bool:
        return self.leq_rows[i] >> j & 1 == 1

    def rank_sizes(self) -> tuple[int, ...]:
        sizes = [0] * self.height
        for r in self.ranks:
            sizes[r] += 1
        return tuple(sizes)

    def covers(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.cover_rows):
            for j in iter_bits(row):
                yield i, j

    def label(self, index: int) -> str:
        element = self.elements[index]
        if isinstance(element, SetPartition):
            return format_partition(element)
        return format_permutation(element)


def _check_poset_bound(n: int) -> None:
    if n < 1:
        raise CapacityError(f"n must be at least 1, got {n}")
    if n > MAX_POSET_N:
        raise CapacityError(f"poset construction supports n up to {MAX_POSET_N}, got {n}")


@lru_cache(maxsize=None)
def build_descent_poset(n: int) -> GradedPoset:
    """The descent order on 132-avoiding permutations of [n], listed
    lexicographically.

    >>> build_descent_poset(4).rank_sizes()
    (1, 6, 6, 1)
    >>> sum(1 for _ in build_descent_poset(4).covers())
    38
    """
    _check_poset_bound(n)
    elements = tuple(enumerate_av132(n))
    masks = [descent_mask(p) for p in elements]
    universe = 1 << (n - 1)
    fiber = [0] * universe
    for i, m in enumerate(masks):
        fiber[m] |= 1 << i
    # superset sums: above[s] collects everything whose mask contains s
    above = list(fiber)
    for b in range(n - 1):
        bit = 1 << b
        for s in range(universe):
            if not s & bit:
                above[s] |= above[s | bit]
    leq_rows = tuple(
        (above[m] & ~fiber[m]) | (1 << i) for i, m in enumerate(masks)
    )
    # every descent set is realized, so the covers are exactly the pairs
    # whose masks differ by a single added descent
    assert all(fiber[s] for s in range(universe))
    cover_rows = tuple(
        sum(fiber[m | (1 << b)] for b in range(n - 1) if not m >> b & 1)
        for m in masks
    )
    ranks = tuple(m.bit_count() for m in masks)
    return GradedPoset("P", n, elements, ranks, leq_rows, cover_rows)


@lru_cache(maxsize=None)
def build_refinement_poset(n: int) -> GradedPoset:
    """The refinement order on noncrossing partitions of [n], listed in
    growth-string order.

    >>> build_refinement_poset(4).rank_sizes()
    (1, 6, 6, 1)
    >>> sum(1 for _ in build_refinement_poset(4).covers())
    28
    """
    _check_poset_bound(n)
    elements = tuple(enumerate_ncp(n))
    index = {q.blocks: i for i, q in enumerate(elements)}
    ranks = tuple(n - len(q.blocks) for q in elements)
    # merging two blocks coarsens by exactly one rank, so the merges that
    # land on another noncrossing partition are exactly the covers
    cover_rows = []
    for q in elements:
        blocks = q.blocks
        row = 0
        for i in range(len(blocks)):
            for j in range(i + 1, len(blocks)):
                merged = tuple(sorted(blocks[i] + blocks[j]))
                target = index.get(
                    blocks[:i] + (merged,) + blocks[i + 1 : j] + blocks[j + 1 :]
                )
                if target is not None:
                    row |= 1 << target
        cover_rows.append(row)
    # upward closure, coarse to fine
    up = [0] * len(elements)
    for i in sorted(range(len(elements)), key=ranks.__getitem__, reverse=True):
        closure = 1 << i
        for j in iter_bits(cover_rows[i]):
            closure |= up[j]
        up[i] = closure
    return GradedPoset("Q", n, elements, ranks, tuple(up), tuple(cover_rows))


def transitive_reduction(
    leq_rows: Sequence[int], ranks: Sequence[int]
) -> tuple[int, ...]:
    """Cover rows of an arbitrary partial order given as bitset rows.

    For each element the candidates above it are scanned rank layer by
    rank layer while accumulating everything reachable through an earlier
    candidate; a candidate already in the accumulator is skipped, and
    contributes nothing new since whatever sits above it arrived with its
    witness.  The scan order only affects speed, not the result.
    """
    size = len(leq_rows)
    height = max(ranks, default=0) + 1
    layers = [0] * height
    for i, r in enumerate(ranks):
        layers[r] |= 1 << i
    rows = []
    for i in range(size):
        strict = leq_rows[i] & ~(1 << i)
        reached = 0
        for r in range(ranks[i] + 1, height):
            for z in iter_bits(strict & layers[r]):
                if not reached >> z & 1:
                    reached |= leq_rows[z] & ~(1 << z)
        rows.append(strict & ~reached)
    return tuple(rows)


def poset_to_json(poset: GradedPoset) -> str:
    """JSON document with element labels, rank sizes and cover pairs."""
    payload = {
        "n": poset.n,
        "family": poset.family,
        "elements": [poset.label(i) for i in range(poset.size)],
        "ranks": list(poset.rank_sizes()),
        "covers": [[i, j] for i, j in poset.covers()],
    }
    return json.dumps(payload, indent=2) + "\n"


def poset_to_dot(poset: GradedPoset) -> str:
    """Graphviz rendering of the cover relation, one rank per layer."""
    lines = [f"digraph {poset.family}{poset.n} {{", "  rankdir=BT;"]
    for r in range(poset.height):
        members = " ".join(
            f'"{poset.label(i)}";' for i in range(poset.size) if poset.ranks[i] == r
        )
        lines.append(f"  {{ rank=same; {members} }}")
    for i, j in poset.covers():
        lines.append(f'  "{poset.label(i)}" -> "{poset.label(j)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
