"""Core arithmetic: presentations, membership, gap tables."""

import math

import pytest

from semipath import (
    InvariantError,
    Presentation,
    SemigroupPair,
    gap_point,
    gaps,
    is_member,
    membership_sieve,
    presentation,
)

S57 = SemigroupPair(5, 7)
S23 = SemigroupPair(2, 3)


def search_presentation(pair, n):
    """Oracle: scan the whole (p, a, b) range for the decomposition of n."""
    hits = [
        (p, a, b)
        for p in range(1, n // pair.product + 3)
        for a in range(pair.beta)
        for b in range(pair.alpha)
        if p * pair.product - a * pair.alpha - b * pair.beta == n
    ]
    assert len(hits) == 1, f"expected unique presentation for {n}, found {hits}"
    return hits[0]


def naive_member_set(pair, bound):
    """Oracle: all i*alpha + j*beta up to bound by double loop."""
    out = set()
    for i in range(bound // pair.alpha + 1):
        for j in range((bound - i * pair.alpha) // pair.beta + 1):
            out.add(i * pair.alpha + j * pair.beta)
    return out


def coprime_pairs(alpha_max, beta_max):
    return [
        SemigroupPair(a, b)
        for a in range(2, alpha_max + 1)
        for b in range(a + 1, beta_max + 1)
        if math.gcd(a, b) == 1
    ]


def test_constructor_rejects_bad_pairs():
    with pytest.raises(ValueError):
        SemigroupPair(1, 5)
    with pytest.raises(ValueError):
        SemigroupPair(4, 6)
    with pytest.raises(ValueError):
        SemigroupPair(7, 5)
    with pytest.raises(ValueError):
        SemigroupPair(3, 3)


def test_derived_constants():
    assert S57.product == 35
    assert S57.frobenius == 23
    assert S23.frobenius == 1


@pytest.mark.parametrize(
    "n,expected",
    [
        (23, (1, 1, 1)),
        (9, (1, 1, 3)),
        (12, (2, 6, 4)),
        (35, (1, 0, 0)),
    ],
)
def test_presentation_examples(n, expected):
    assert search_presentation(S57, n) == expected
    q = presentation(S57, n)
    assert (q.p, q.a, q.b) == expected


def test_presentation_rejects_nonpositive():
    with pytest.raises(ValueError):
        presentation(S57, 0)
    with pytest.raises(ValueError):
        presentation(S57, -4)


def test_presentation_round_trip_and_ranges():
    for pair in (S23, S57, SemigroupPair(4, 9)):
        for n in range(1, 3 * pair.product + 1):
            q = presentation(pair, n)
            assert q.value(pair) == n
            assert q.p >= 1
            assert 0 <= q.a < pair.beta
            assert 0 <= q.b < pair.alpha


def test_presentation_matches_search_oracle():
    for n in range(1, 2 * S57.product + 1):
        q = presentation(S57, n)
        assert (q.p, q.a, q.b) == search_presentation(S57, n)


def test_membership_examples():
    assert is_member(S57, 0)
    assert not is_member(S57, 23)
    assert is_member(S57, 12)
    with pytest.raises(ValueError):
        is_member(S57, -1)


def test_membership_agrees_with_double_loop():
    for pair in coprime_pairs(10, 13):
        bound = 3 * pair.product
        naive = naive_member_set(pair, bound)
        for n in range(bound + 1):
            assert is_member(pair, n) == (n in naive)
        sieve = membership_sieve(pair, bound)
        assert all(sieve[n] == (n in naive) for n in range(bound + 1))


def test_everything_past_frobenius_is_a_member():
    for pair in coprime_pairs(8, 13):
        for n in range(pair.frobenius + 1, pair.frobenius + 2 * pair.product):
            assert is_member(pair, n)
    assert not is_member(S57, S57.frobenius)


def test_gaps_examples():
    assert [g.value for g in gaps(S57)] == [1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23]
    assert [g.value for g in gaps(S23)] == [1]
    assert len(gaps(S57)) == 12


def test_gap_points_lie_inside_triangle():
    for pair in coprime_pairs(8, 13):
        table = gaps(pair)
        assert len(table) == (pair.alpha - 1) * (pair.beta - 1) // 2
        for g in table:
            assert 1 <= g.a < pair.beta
            assert 1 <= g.b < pair.alpha
            assert g.a * pair.alpha + g.b * pair.beta < pair.product
            assert g.value == pair.product - g.a * pair.alpha - g.b * pair.beta


def test_gap_criterion_three_ways():
    for pair in (S23, S57, SemigroupPair(4, 7)):
        gap_values = {g.value for g in gaps(pair)}
        for n in range(1, pair.product + 1):
            q = presentation(pair, n)
            as_gap = q.p == 1 and q.a >= 1 and q.b >= 1
            assert as_gap == (not is_member(pair, n))
            assert as_gap == (n in gap_values)


def test_gap_point_lookup():
    assert gap_point(S57, 9) == next(g for g in gaps(S57) if g.value == 9)
    with pytest.raises(ValueError):
        gap_point(S57, 12)


def test_presentation_value_method():
    assert Presentation(1, 1, 1).value(S57) == 23
