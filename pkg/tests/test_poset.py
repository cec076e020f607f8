import json

import pytest

import support
from catalan_posets.bijection import ncp_to_perm
from catalan_posets.counting import narayana
from catalan_posets.errors import CapacityError
from catalan_posets.partitions import enumerate_ncp, format_partition
from catalan_posets.permutations import descent_set, enumerate_av132, format_permutation
from catalan_posets.poset import (
    MAX_POSET_N,
    build_descent_poset,
    build_refinement_poset,
    descent_leq,
    poset_to_dot,
    poset_to_json,
    refinement_leq,
    transitive_reduction,
)

SIZE_FOUR_LABELS = {
    "1234",
    "2134",
    "2314",
    "2341",
    "3124",
    "3214",
    "3241",
    "3412",
    "3421",
    "4123",
    "4213",
    "4231",
    "4312",
    "4321",
}


def both_posets(n):
    return build_descent_poset(n), build_refinement_poset(n)


def test_descent_leq_examples():
    assert descent_leq((2, 1, 3, 4), (3, 2, 1, 4))  # {1} inside {1,2}
    assert descent_leq((2, 1, 3, 4), (2, 1, 3, 4))  # reflexive
    # strictly below needs strictly smaller descent set: distinct
    # permutations sharing a descent set are incomparable
    assert not descent_leq((2, 1, 3, 4), (3, 1, 2, 4))
    assert not descent_leq((3, 1, 2, 4), (2, 1, 3, 4))
    # {2} is properly inside {1,2}
    assert descent_leq((2, 3, 1, 4), (4, 2, 1, 3))


def test_refinement_leq_examples():
    from catalan_posets.partitions import parse_partition

    fine = parse_partition("{1}/{2}/{3}")
    coarse = parse_partition("{1,2,3}")
    assert refinement_leq(fine, coarse)
    assert not refinement_leq(coarse, fine)
    assert refinement_leq(fine, fine)
    a = parse_partition("{1,2}/{3}")
    b = parse_partition("{1,3}/{2}")
    assert not refinement_leq(a, b) and not refinement_leq(b, a)


def test_elements_listed_in_enumeration_order():
    p, q = both_posets(5)
    assert [p.label(i) for i in range(p.size)] == [
        format_permutation(x) for x in enumerate_av132(5)
    ]
    assert [q.label(i) for i in range(q.size)] == [
        format_partition(x) for x in enumerate_ncp(5)
    ]


def test_ranks_match_statistic():
    p, q = both_posets(6)
    for i, perm in enumerate(enumerate_av132(6)):
        assert p.ranks[i] == len(descent_set(perm))
    for i, part in enumerate(enumerate_ncp(6)):
        assert q.ranks[i] == 6 - len(part.blocks)


def test_poset_axioms():
    for n in range(1, 9):
        for poset in both_posets(n):
            size = poset.size
            for i in range(size):
                row = poset.leq_rows[i]
                assert row >> i & 1  # reflexive
                probe = row
                while probe:
                    low = probe & -probe
                    j = low.bit_length() - 1
                    probe ^= low
                    if i != j:
                        assert not poset.leq_rows[j] >> i & 1  # antisymmetric
                    # transitive: everything above j is above i
                    assert poset.leq_rows[j] & ~row == 0


def test_matrix_matches_predicate():
    for n in range(1, 7):
        p, q = both_posets(n)
        perms = list(enumerate_av132(n))
        for i in range(p.size):
            for j in range(p.size):
                assert p.leq(i, j) == descent_leq(perms[i], perms[j])
        parts = list(enumerate_ncp(n))
        for i in range(q.size):
            for j in range(q.size):
                assert q.leq(i, j) == refinement_leq(parts[i], parts[j])


def test_covers_match_generic_reduction():
    for n in range(1, 7):
        for poset in both_posets(n):
            reduced = transitive_reduction(poset.leq_rows, poset.ranks)
            assert tuple(reduced) == tuple(poset.cover_rows)


def test_cover_edges_step_one_rank():
    for n in range(1, 9):
        for poset in both_posets(n):
            top = max(poset.ranks)
            has_up = [False] * poset.size
            has_down = [False] * poset.size
            for lower, upper in poset.covers():
                assert poset.ranks[upper] == poset.ranks[lower] + 1
                assert poset.leq(lower, upper)
                has_up[lower] = True
                has_down[upper] = True
            for i in range(poset.size):
                assert has_up[i] == (poset.ranks[i] < top)
                assert has_down[i] == (poset.ranks[i] > 0)


def test_cover_counts_size_four():
    p, q = both_posets(4)
    assert sum(1 for _ in p.covers()) == 38
    assert sum(1 for _ in q.covers()) == 28


def test_rank_sizes_are_narayana():
    for n in range(1, 10):
        expected = tuple(narayana(n, k) for k in range(1, n + 1))
        p, q = both_posets(n)
        assert p.rank_sizes() == expected
        assert q.rank_sizes() == expected


def test_size_four_descent_poset_shape():
    p = build_descent_poset(4)
    assert p.size == 14
    assert p.rank_sizes() == (1, 6, 6, 1)
    bottoms = [i for i in range(p.size) if p.ranks[i] == 0]
    tops = [i for i in range(p.size) if p.ranks[i] == 3]
    assert [p.label(i) for i in bottoms] == ["1234"]
    assert [p.label(i) for i in tops] == ["4321"]
    # bottom below everything, top above everything
    assert all(p.leq(bottoms[0], j) for j in range(p.size))
    assert all(p.leq(j, tops[0]) for j in range(p.size))


def test_refinement_poset_extremes():
    q = build_refinement_poset(5)
    bottom = [i for i in range(q.size) if q.ranks[i] == 0]
    top = [i for i in range(q.size) if q.ranks[i] == 4]
    assert [q.label(i) for i in bottom] == ["{1}/{2}/{3}/{4}/{5}"]
    assert [q.label(i) for i in top] == ["{1,2,3,4,5}"]


def test_strict_pair_counts_size_four():
    # derived by layer arithmetic: 13 from the bottom, 26 between the
    # middle ranks (one per middle cover), 6 + 6 into the top
    p, q = both_posets(4)
    assert len(support.strict_pairs(p)) == 51
    assert len(support.strict_pairs(q)) == 41


def test_dot_golden_size_three():
    assert poset_to_dot(build_descent_poset(3)) == (
        "digraph P3 {\n"
        "  rankdir=BT;\n"
        '  { rank=same; "123"; }\n'
        '  { rank=same; "213"; "231"; "312"; }\n'
        '  { rank=same; "321"; }\n'
        '  "123" -> "213";\n'
        '  "123" -> "231";\n'
        '  "123" -> "312";\n'
        '  "213" -> "321";\n'
        '  "231" -> "321";\n'
        '  "312" -> "321";\n'
        "}\n"
    )


def test_dot_node_set_size_four():
    dot = poset_to_dot(build_descent_poset(4))
    nodes = set()
    for line in dot.splitlines():
        line = line.strip()
        if line.startswith("{ rank=same;"):
            nodes.update(
                part.strip().strip('";')
                for part in line[len("{ rank=same;") : -1].split(";")
                if part.strip()
            )
    assert nodes == SIZE_FOUR_LABELS


def test_json_round_trip():
    for n in range(1, 6):
        for poset in both_posets(n):
            data = json.loads(poset_to_json(poset))
            assert data["n"] == n
            assert data["family"] == poset.family
            assert data["elements"] == [poset.label(i) for i in range(poset.size)]
            assert data["ranks"] == list(poset.rank_sizes())
            assert sorted(map(tuple, data["covers"])) == sorted(poset.covers())


def test_json_ends_with_newline():
    assert poset_to_json(build_descent_poset(2)).endswith("\n")


def test_capacity_bounds():
    with pytest.raises(CapacityError):
        build_descent_poset(MAX_POSET_N + 1)
    with pytest.raises(CapacityError):
        build_refinement_poset(MAX_POSET_N + 1)
    with pytest.raises(CapacityError):
        build_descent_poset(0)


def test_coarsening_via_bijection_on_refinement_covers():
    # merging blocks strictly shrinks the image's descent set
    for n in range(2, 8):
        q = build_refinement_poset(n)
        parts = list(enumerate_ncp(n))
        for lower, upper in q.covers():
            d_fine = descent_set(ncp_to_perm(parts[lower]))
            d_coarse = descent_set(ncp_to_perm(parts[upper]))
            assert d_coarse.mask != d_fine.mask
            assert d_coarse.mask & ~d_fine.mask == 0
