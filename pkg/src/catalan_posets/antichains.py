"""Antichain extremes of a graded poset.

Width comes from the matching side of Dilworth's theorem: a maximum
matching on the split bipartite graph of strict comparabilities yields a
minimum chain cover, and unreachable/reachable sides of the final
alternating search certify a maximum antichain of the same size.

The largest union of k antichains comes from the chain side of
Greene-Kleitman duality: successive shortest augmenting paths in a
min-cost flow build chain families whose coverage gains form a partition,
and the conjugate partial sums of that partition are the k-antichain
numbers.
"""

from __future__ import annotations

from functools import lru_cache
from heapq import heappop, heappush
from typing import Sequence

from .poset import GradedPoset, iter_bits

_INF = float("inf")


def _strict_rows(poset: GradedPoset) -> list[int]:
    return [poset.leq_rows[i] & ~(1 << i) for i in range(poset.size)]


def hopcroft_karp(adjacency: Sequence[int], right_size: int) -> tuple[list[int], list[int]]:
    """Maximum matching in a bipartite graph; adjacency[u] is a bitmask of
    right-side neighbors.  Returns (match_left, match_right), -1 meaning
    unmatched."""
    left_size = len(adjacency)
    match_left = [-1] * left_size
    match_right = [-1] * right_size
    for u in range(left_size):
        for v in iter_bits(adjacency[u]):
            if match_right[v] == -1:
                match_left[u] = v
                match_right[v] = u
                break
    while True:
        # BFS layers over left vertices, starting from the free ones
        dist = [-1] * left_size
        queue = [u for u in range(left_size) if match_left[u] == -1]
        for u in queue:
            dist[u] = 0
        head = 0
        reached_free = False
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in iter_bits(adjacency[u]):
                w = match_right[v]
                if w == -1:
                    reached_free = True
                elif dist[w] == -1:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not reached_free:
            return match_left, match_right
        # layered DFS; arcs are consumed so each is tried once per phase
        remaining = list(adjacency)

        def advance(u: int) -> bool:
            while remaining[u]:
                low = remaining[u] & -remaining[u]
                remaining[u] ^= low
                v = low.bit_length() - 1
                w = match_right[v]
                if w == -1 or (dist[w] == dist[u] + 1 and advance(w)):
                    match_left[u] = v
                    match_right[v] = u
                    return True
            dist[u] = -2
            return False

        for u in range(left_size):
            if match_left[u] == -1:
                advance(u)


def max_antichain_elements(poset: GradedPoset) -> tuple[int, ...]:
    """Indices of one maximum antichain.

    The alternating search from unmatched chain starts splits the split
    graph into reachable and unreachable sides; elements whose left copy
    is reachable and right copy is not form an antichain matching the
    chain-cover bound, which certifies maximality.  The certificate is
    re-checked before returning.
    """
    strict = _strict_rows(poset)
    match_left, match_right = hopcroft_karp(strict, poset.size)
    matched = sum(1 for v in match_left if v != -1)
    target = poset.size - matched
    reached_left = 0
    reached_right = 0
    frontier = []
    for u in range(poset.size):
        if match_left[u] == -1:
            reached_left |= 1 << u
            frontier.append(u)
    while frontier:
        fresh_left = []
        for u in frontier:
            fresh = strict[u] & ~reached_right
            reached_right |= fresh
            for v in iter_bits(fresh):
                w = match_right[v]
                if w != -1 and not reached_left >> w & 1:
                    reached_left |= 1 << w
                    fresh_left.append(w)
        frontier = fresh_left
    chosen = reached_left & ~reached_right
    antichain = tuple(iter_bits(chosen))
    if len(antichain) != target:
        raise RuntimeError("antichain size disagrees with the matching bound")
    for x in antichain:
        if strict[x] & chosen:
            raise RuntimeError("selected elements are not pairwise incomparable")
    return antichain


def max_antichain(poset: GradedPoset) -> int:
    """Width of the poset.

    >>> from .poset import build_descent_poset
    >>> max_antichain(build_descent_poset(4))
    6
    >>> max_antichain(build_descent_poset(2))   # a two-element chain
    1
    """
    return len(max_antichain_elements(poset))


@lru_cache(maxsize=None)
def chain_cover_profile(poset: GradedPoset) -> tuple[int, ...]:
    """Nonincreasing coverage gains of successive optimal chain families.

    Entry sums give the most elements coverable by 1, 2, ... disjoint
    chains; the whole profile is a partition of the element count.  Found
    by min-cost flow on the split graph (each element crossed at gain 1),
    one augmentation per chain, Dijkstra on reduced costs with potentials
    seeded by a rank-order relaxation.  Once a chain gains only a single
    element all later ones do too, so the tail is filled without flows.
    """
    size = poset.size
    strict = _strict_rows(poset)
    source = 2 * size
    sink = 2 * size + 1
    node_count = 2 * size + 2
    to: list[int] = []
    cap: list[int] = []
    cost: list[int] = []
    adjacency: list[list[int]] = [[] for _ in range(node_count)]

    def add_edge(u: int, v: int, c: int, w: int) -> None:
        adjacency[u].append(len(to))
        to.append(v)
        cap.append(c)
        cost.append(w)
        adjacency[v].append(len(to))
        to.append(u)
        cap.append(0)
        cost.append(-w)

    for i in range(size):
        add_edge(source, 2 * i, 1, 0)
        add_edge(2 * i, 2 * i + 1, 1, -1)
        add_edge(2 * i + 1, sink, 1, 0)
        for j in iter_bits(strict[i]):
            add_edge(2 * i + 1, 2 * j, 1, 0)

    # exact initial distances by relaxing in rank order (strict edges only
    # ever point to higher ranks in these posets)
    dist0 = [_INF] * node_count
    dist0[source] = 0
    for i in range(size):
        dist0[2 * i] = 0
    for i in sorted(range(size), key=poset.ranks.__getitem__):
        through = dist0[2 * i] - 1
        if through < dist0[2 * i + 1]:
            dist0[2 * i + 1] = through
        out = dist0[2 * i + 1]
        if out < dist0[sink]:
            dist0[sink] = out
        for j in iter_bits(strict[i]):
            if out < dist0[2 * j]:
                dist0[2 * j] = out
    potential = dist0

    profile: list[int] = []
    covered = 0
    while covered < size:
        dist = [_INF] * node_count
        dist[source] = 0
        parent = [-1] * node_count
        heap = [(0, source)]
        while heap:
            d, u = heappop(heap)
            if d > dist[u]:
                continue
            pu = potential[u]
            for eid in adjacency[u]:
                if cap[eid] <= 0:
                    continue
                v = to[eid]
                nd = d + cost[eid] + pu - potential[v]
                if nd < dist[v]:
                    dist[v] = nd
                    parent[v] = eid
                    heappush(heap, (nd, v))
        reach = dist[sink]
        if reach == _INF:
            raise RuntimeError("no augmenting path although elements remain uncovered")
        for v in range(node_count):
            potential[v] += min(dist[v], reach)
        gain = -int(potential[sink])
        if gain <= 0 or (profile and gain > profile[-1]):
            raise RuntimeError("augmentation gains are not a nonincreasing partition")
        if gain == 1:
            break
        v = sink
        while v != source:
            eid = parent[v]
            cap[eid] -= 1
            cap[eid ^ 1] += 1
            v = to[eid ^ 1]
        profile.append(gain)
        covered += gain
    profile.extend([1] * (size - covered))
    return tuple(profile)


def max_k_antichain_union(poset: GradedPoset, k: int) -> int:
    """Largest number of elements in a union of k antichains.

    >>> from .poset import build_descent_poset
    >>> [max_k_antichain_union(build_descent_poset(4), k) for k in (1, 2, 3, 4)]
    [6, 12, 13, 14]
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    return sum(min(part, k) for part in chain_cover_profile(poset))


def check_k_sperner(poset: GradedPoset, k: int) -> bool:
    """True iff the largest k-antichain union is the sum of the k largest
    rank sizes.

    >>> from .poset import build_descent_poset
    >>> all(check_k_sperner(build_descent_poset(5), k) for k in range(1, 6))
    True
    """
    expected = sum(sorted(poset.rank_sizes(), reverse=True)[:k])
    return max_k_antichain_union(poset, k) == expected
