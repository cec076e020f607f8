"""The named verification checks behind the CLI, with their size caps.

Each check is exhaustive at its scale and returns reports whose violation
lists are expected to be empty.  Caps reflect where exhaustive checking
stays within interactive budgets; exceeding one raises a capacity error
rather than silently thinning the check.
"""

from __future__ import annotations

import time
from typing import Sequence

from .antichains import check_k_sperner, max_antichain, max_antichain_elements
from .bijection import perm_to_ncp
from .census import build_census, count_by_descent_set
from .counting import catalan, narayana
from .descent_sets import DescentSet, reverse_complement_mask
from .duality import check_coarsening, check_self_duality
from .errors import CapacityError
from .poset import build_descent_poset, build_refinement_poset
from .reports import VerificationReport, note_violation

CHECK_BOUNDS = {
    "coarsening": 8,
    "ranks": 9,
    "lemma": 12,
    "selfdual": 7,
    "sperner": 8,
}
CHECK_ORDER = ("coarsening", "ranks", "lemma", "selfdual", "sperner")

#: Within the lemma check, the recursive counter is compared entry by
#: entry against the census up to this size; above it only the
#: reverse-complement symmetry of the census is tested.
RECURSION_AGREEMENT_BOUND = 9
#: Within the sperner suite, scales of the two heavier sub-checks.
DK_BOUND = 6
TRANSFER_BOUND = 7


def _is_unimodal(seq: Sequence[int]) -> bool:
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
        i += 1
    return i == len(seq) - 1


def check_rank_statistics(n: int) -> VerificationReport:
    """Rank sizes of both posets match the Narayana row and each other,
    and the row is palindromic and unimodal."""
    start = time.perf_counter()
    violations: list[str] = []
    sizes_p = build_descent_poset(n).rank_sizes()
    sizes_q = build_refinement_poset(n).rank_sizes()
    expected = tuple(narayana(n, k) for k in range(1, n + 1))
    if sizes_p != expected:
        note_violation(violations, f"descent poset rank sizes {sizes_p} != {expected}")
    if sizes_q != expected:
        note_violation(violations, f"refinement poset rank sizes {sizes_q} != {expected}")
    if sizes_p != tuple(reversed(sizes_p)):
        note_violation(violations, f"rank sizes {sizes_p} are not palindromic")
    if not _is_unimodal(sizes_p):
        note_violation(violations, f"rank sizes {sizes_p} are not unimodal")
    return VerificationReport(
        "ranks", n, 2 * n, tuple(violations), time.perf_counter() - start
    )


def check_census_symmetry(n: int) -> VerificationReport:
    """Census counts are invariant under reverse complement of the descent
    set, and (at recursion scale) match the enumeration-free counter."""
    start = time.perf_counter()
    census = build_census(n)
    violations: list[str] = []
    compare_recursion = n <= RECURSION_AGREEMENT_BOUND
    for mask, count in enumerate(census):
        partner = reverse_complement_mask(n, mask)
        if count != census[partner]:
            note_violation(
                violations,
                f"count {count} at {DescentSet(n, mask)} != "
                f"count {census[partner]} at {DescentSet(n, partner)}",
            )
        if compare_recursion and count_by_descent_set(n, mask) != count:
            note_violation(
                violations,
                f"recursive counter disagrees with census at {DescentSet(n, mask)}",
            )
    if sum(census) != catalan(n):
        note_violation(violations, f"census total {sum(census)} != catalan({n})")
    return VerificationReport(
        "lemma", n, len(census), tuple(violations), time.perf_counter() - start
    )


def check_sperner_suite(n: int) -> list[VerificationReport]:
    """Three reports: width equals the largest rank size at n; the
    k-antichain numbers equal top-k rank sums at min(n, 6) for every k;
    a maximum antichain of the descent poset stays an antichain of the
    refinement poset after pulling back through the bijection, at
    min(n, 7)."""
    reports = []

    start = time.perf_counter()
    violations: list[str] = []
    poset = build_descent_poset(n)
    width = max_antichain(poset)
    largest_rank = max(poset.rank_sizes())
    if width != largest_rank:
        note_violation(violations, f"width {width} != largest rank size {largest_rank}")
    reports.append(
        VerificationReport(
            "sperner-width", n, poset.size, tuple(violations), time.perf_counter() - start
        )
    )

    dk_n = min(n, DK_BOUND)
    start = time.perf_counter()
    violations = []
    dk_poset = build_descent_poset(dk_n)
    for k in range(1, dk_n + 1):
        if not check_k_sperner(dk_poset, k):
            note_violation(violations, f"union of {k} antichains misses the top-{k} rank sum")
    reports.append(
        VerificationReport(
            "sperner-dk", dk_n, dk_n, tuple(violations), time.perf_counter() - start
        )
    )

    transfer_n = min(n, TRANSFER_BOUND)
    start = time.perf_counter()
    violations = []
    p_poset = build_descent_poset(transfer_n)
    q_poset = build_refinement_poset(transfer_n)
    q_index = {q.blocks: i for i, q in enumerate(q_poset.elements)}
    mapped = [
        q_index[perm_to_ncp(p_poset.elements[i]).blocks]
        for i in max_antichain_elements(p_poset)
    ]
    examined = 0
    for position, a in enumerate(mapped):
        for b in mapped[position + 1 :]:
            examined += 1
            # a != b here since the pulled-back images are distinct
            if q_poset.leq(a, b) or q_poset.leq(b, a):
                note_violation(
                    violations,
                    f"images {q_poset.label(a)} and {q_poset.label(b)} are comparable",
                )
    reports.append(
        VerificationReport(
            "sperner-transfer",
            transfer_n,
            examined,
            tuple(violations),
            time.perf_counter() - start,
        )
    )
    return reports


def run_checks(
    names: Sequence[str], n: int, clamp: bool = False
) -> list[VerificationReport]:
    """Run named checks at ground size n.

    With clamp=False a request beyond a check's cap raises a capacity
    error; with clamp=True (the "all" suite) each check runs at the
    largest size it supports, at most n.
    """
    if n < 1:
        raise CapacityError(f"n must be at least 1, got {n}")
    reports: list[VerificationReport] = []
    for name in names:
        bound = CHECK_BOUNDS.get(name)
        if bound is None:
            raise ValueError(f"unknown check {name!r}")
        use = min(n, bound) if clamp else n
        if use > bound:
            raise CapacityError(f"check {name} supports n up to {bound}, got {n}")
        if name == "coarsening":
            reports.append(check_coarsening(use))
        elif name == "ranks":
            reports.append(check_rank_statistics(use))
        elif name == "lemma":
            reports.append(check_census_symmetry(use))
        elif name == "selfdual":
            reports.append(check_self_duality(use))
        else:
            reports.extend(check_sperner_suite(use))
    return reports
