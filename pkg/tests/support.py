"""Independent brute-force oracles used to pin down expected values.

Everything here is written from definitions only: no imports from the
package under test, no shared helpers, the dumbest correct algorithm each
time.  Slow is fine; these run at small sizes.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterator, Sequence

Blocks = tuple[tuple[int, ...], ...]


def contains_132(perm: Sequence[int]) -> bool:
    """Definitional cubic scan for an order-isomorphic copy of 1-3-2."""
    m = len(perm)
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                if perm[i] < perm[k] < perm[j]:
                    return True
    return False


def brute_av132(n: int) -> list[tuple[int, ...]]:
    return [p for p in permutations(range(1, n + 1)) if not contains_132(p)]


def brute_descent_mask(perm: Sequence[int]) -> int:
    mask = 0
    for i in range(len(perm) - 1):
        if perm[i] > perm[i + 1]:
            mask |= 1 << i
    return mask


def brute_set_partitions(n: int) -> Iterator[Blocks]:
    """All set partitions of {1..n} in canonical form (blocks by minimum).

    Recurrence: insert n into each block of a partition of {1..n-1}, or as
    a new singleton.  Appending n preserves canonical order.
    """
    if n == 0:
        yield ()
        return
    for smaller in brute_set_partitions(n - 1):
        for i in range(len(smaller)):
            yield smaller[:i] + (smaller[i] + (n,),) + smaller[i + 1 :]
        yield smaller + ((n,),)


def brute_has_crossing(blocks: Blocks) -> bool:
    """a < b < c < d with a,c together and b,d together in another block."""
    for first, second in combinations(blocks, 2):
        for a, c in combinations(first, 2):
            for b, d in combinations(second, 2):
                if a < b < c < d or b < a < d < c:
                    return True
    return False


def brute_refines(finer: Blocks, coarser: Blocks) -> bool:
    """Every block of `finer` is a subset of some block of `coarser`."""
    coarse_sets = [set(block) for block in coarser]
    return all(
        any(set(block) <= big for big in coarse_sets) for block in finer
    )


def strict_pairs(poset) -> list[tuple[int, int]]:
    return [
        (i, j)
        for i in range(poset.size)
        for j in range(poset.size)
        if i != j and poset.leq(i, j)
    ]


def comparable_mask_rows(poset) -> list[int]:
    """Row i: bitmask of elements strictly comparable with i."""
    rows = []
    for i in range(poset.size):
        mask = 0
        for j in range(poset.size):
            if i != j and (poset.leq(i, j) or poset.leq(j, i)):
                mask |= 1 << j
        rows.append(mask)
    return rows


def brute_width(poset) -> int:
    """Largest pairwise-incomparable subset by full subset enumeration.

    size must stay small; 2^size subsets are scanned.
    """
    if poset.size > 16:
        raise ValueError("brute_width is for tiny posets only")
    comp = comparable_mask_rows(poset)
    best = 0
    for subset in range(1 << poset.size):
        count = 0
        ok = True
        probe = subset
        while probe:
            low = probe & -probe
            i = low.bit_length() - 1
            if comp[i] & subset:
                ok = False
                break
            count += 1
            probe ^= low
        if ok:
            best = max(best, count)
    return best


def maximal_chains(poset) -> list[frozenset[int]]:
    """All maximal chains, found by walking cover edges from the minima."""
    children: dict[int, list[int]] = {i: [] for i in range(poset.size)}
    for lower, upper in poset.covers():
        children[lower].append(upper)
    chains: list[frozenset[int]] = []

    def walk(path: list[int]) -> None:
        tip = path[-1]
        if not children[tip]:
            chains.append(frozenset(path))
            return
        for nxt in children[tip]:
            walk(path + [nxt])

    for i in range(poset.size):
        if poset.ranks[i] == 0:
            walk([i])
    return chains


def brute_max_k_chain_union(poset, k: int) -> int:
    """Largest union of k chains.

    Any chain extends to a maximal one without shrinking the union, so only
    combinations of maximal chains need to be scanned.
    """
    chains = maximal_chains(poset)
    k = min(k, len(chains))
    best = 0
    for combo in combinations(chains, k):
        size = len(frozenset().union(*combo))
        best = max(best, size)
    return best


def brute_max_k_antichain_union(poset, k: int) -> int:
    """Largest subset with no chain longer than k, by subset enumeration.

    Longest chain inside each subset is found by a rank-order DP; subsets
    no bigger than the best so far are skipped.
    """
    if poset.size > 16:
        raise ValueError("brute_max_k_antichain_union is for tiny posets only")
    below = [0] * poset.size
    for i in range(poset.size):
        for j in range(poset.size):
            if i != j and poset.leq(j, i):
                below[i] |= 1 << j
    order = sorted(range(poset.size), key=poset.ranks.__getitem__)
    best = 0
    for subset in range(1 << poset.size):
        size = subset.bit_count()
        if size <= best:
            continue
        length = [0] * poset.size
        height = 0
        for i in order:
            if not subset >> i & 1:
                continue
            longest_below = 0
            probe = below[i] & subset
            while probe:
                low = probe & -probe
                j = low.bit_length() - 1
                probe ^= low
                longest_below = max(longest_below, length[j])
            length[i] = longest_below + 1
            height = max(height, length[i])
            if height > k:
                break
        else:
            best = size
    return best


def has_antichain_of_size(poset, members: Sequence[int], k: int) -> bool:
    for combo in combinations(members, k):
        if all(
            not poset.leq(a, b) and not poset.leq(b, a)
            for a, b in combinations(combo, 2)
        ):
            return True
    return False
