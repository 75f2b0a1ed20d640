"""Lean-set recognition and enumeration."""

import math
from collections import Counter
from itertools import combinations

import pytest

from semipath import (
    LeanSet,
    SemigroupPair,
    count_lean_sets,
    count_lean_sets_total,
    enumerate_lean_sets,
    gaps,
    is_lean,
    is_member,
)

S57 = SemigroupPair(5, 7)
S23 = SemigroupPair(2, 3)


def brute_lean_sets(pair):
    """Oracle: filter all subsets of the gaps by the pairwise definition."""
    gap_values = [g.value for g in gaps(pair)]
    out = []
    for size in range(len(gap_values) + 1):
        for chosen in combinations(gap_values, size):
            values = (0,) + chosen
            if all(not is_member(pair, y - x) for x, y in combinations(sorted(values), 2)):
                out.append(frozenset(values))
    return out


@pytest.mark.parametrize(
    "xs,expected",
    [
        ({0, 9, 6, 8}, True),
        ({0, 5}, False),
        ({0}, True),
        ({0, 23}, True),
    ],
)
def test_is_lean_examples(xs, expected):
    assert is_lean(S57, xs) is expected


def test_is_lean_requires_zero():
    with pytest.raises(ValueError):
        is_lean(S57, {6, 8, 9})
    with pytest.raises(ValueError):
        is_lean(S57, set())


def test_enumerate_2_3():
    assert [l.members for l in enumerate_lean_sets(S23)] == [(0,), (0, 1)]


def test_enumerate_5_7_counts():
    assert sum(1 for _ in enumerate_lean_sets(S57)) == 66
    assert sum(1 for _ in enumerate_lean_sets(S57, 3)) == 20
    assert [l.members for l in enumerate_lean_sets(S57, 0)] == [(0,)]


def test_enumerate_order_snapshot():
    first = [l.members for l in enumerate_lean_sets(S57)][:8]
    assert first == [
        (0,),
        (0, 23),
        (0, 16),
        (0, 16, 18),
        (0, 13, 16),
        (0, 8, 16),
        (0, 3, 16),
        (0, 9),
    ]


def test_enumerate_is_lexicographic_in_a_sequences():
    chains = [tuple(p.a for p in l.gap_points) for l in enumerate_lean_sets(S57)]
    prefix_order = [tuple((p.a, p.b) for p in l.gap_points) for l in enumerate_lean_sets(S57)]
    assert prefix_order == sorted(prefix_order)
    assert chains == [tuple(p[0] for p in c) for c in sorted(prefix_order)]


def test_enumerate_matches_brute_force():
    for pair in (S23, S57, SemigroupPair(4, 7), SemigroupPair(3, 8)):
        expected = Counter(len(s) - 1 for s in brute_lean_sets(pair))
        streamed = list(enumerate_lean_sets(pair))
        got = Counter(l.gap_count for l in streamed)
        assert got == expected
        assert {frozenset(l.members) for l in streamed} == set(brute_lean_sets(pair))


def test_stream_properties():
    seen = set()
    for lean in enumerate_lean_sets(S57):
        assert is_lean(S57, lean.members)
        assert lean.members not in seen
        seen.add(lean.members)
        avals = [p.a for p in lean.gap_points]
        bvals = [p.b for p in lean.gap_points]
        assert avals == sorted(avals) and len(set(avals)) == len(avals)
        assert bvals == sorted(bvals, reverse=True) and len(set(bvals)) == len(bvals)
        assert len(lean.members) <= S57.alpha


def test_filtered_stream_is_subsequence():
    full = [l.members for l in enumerate_lean_sets(S57)]
    for r in range(S57.alpha):
        filtered = [l.members for l in enumerate_lean_sets(S57, r)]
        assert filtered == [m for m in full if len(m) == r + 1]


def test_filter_bounds():
    with pytest.raises(ValueError):
        list(enumerate_lean_sets(S57, 5))
    with pytest.raises(ValueError):
        list(enumerate_lean_sets(S57, -1))


def test_counts_match_formulas_small_sweep():
    for alpha in range(2, 9):
        for beta in range(alpha + 1, 14):
            if math.gcd(alpha, beta) != 1:
                continue
            pair = SemigroupPair(alpha, beta)
            per_r = Counter(l.gap_count for l in enumerate_lean_sets(pair))
            for r in range(alpha):
                assert per_r.get(r, 0) == count_lean_sets(pair, r)
            assert sum(per_r.values()) == count_lean_sets_total(pair)


def test_from_members_normalises_order_and_validates():
    lean = LeanSet.from_members(S57, [8, 0, 9, 6])
    assert lean.members == (0, 6, 8, 9)
    assert [(p.a, p.b) for p in lean.gap_points] == [(1, 3), (3, 2), (4, 1)]
    with pytest.raises(ValueError):
        LeanSet.from_members(S57, [0, 5])
