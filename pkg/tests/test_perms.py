import itertools

import pytest
from hypothesis import given, strategies as st

from mmp132.errors import PatternSyntaxError, PermutationError
from mmp132.perms import (
    EMPTY,
    PatternSpec,
    count_avoiders,
    enumerate_avoiders,
    format_permutation,
    inverse,
    is_132_avoiding,
    matches,
    mmp_count,
    parse_pattern,
    parse_permutation,
    pattern_of,
    quadrant_counts,
    quadrant_counts_all,
    reduce,
)
from mmp132.series import catalan

perms = st.integers(1, 7).flatmap(
    lambda n: st.permutations(tuple(range(1, n + 1)))
)


# ---------------------------------------------------------------------------
# parsing

def test_parse_pattern_basic():
    p = parse_pattern("2,0,1,0")
    assert p.coords == (2, 0, 1, 0)
    assert p.serialize() == "2,0,1,0"


def test_parse_pattern_empty_marker():
    p = parse_pattern("e,0,E,1")
    assert p.a is EMPTY and p.c is EMPTY
    assert p.has_empty
    assert p.serialize() == "e,0,e,1"


@pytest.mark.parametrize("bad", ["1,2,3", "1,2,3,4,5", "x,0,0,0", "-1,0,0,0", ""])
def test_parse_pattern_rejects(bad):
    with pytest.raises(PatternSyntaxError):
        parse_pattern(bad)


def test_pattern_of_coerces():
    assert pattern_of((1, 0, 1, 0)) == parse_pattern("1,0,1,0")
    p = parse_pattern("0,2,0,1")
    assert pattern_of(p) is p


def test_sym_swaps_b_and_d():
    assert parse_pattern("1,2,3,0").sym().coords == (1, 0, 3, 2)
    p = parse_pattern("0,e,1,2")
    assert p.sym().sym() == p


def test_parse_permutation_forms():
    assert parse_permutation("471569283") == (4, 7, 1, 5, 6, 9, 2, 8, 3)
    assert parse_permutation("4,7,1,5,6,9,2,8,3") == (4, 7, 1, 5, 6, 9, 2, 8, 3)
    assert parse_permutation("1") == (1,)


@pytest.mark.parametrize("bad", ["011", "22", "1,2,4", "0", "abc", "1,2,2"])
def test_parse_permutation_rejects(bad):
    with pytest.raises(PermutationError):
        parse_permutation(bad)


def test_format_permutation_round_trip():
    sigma = (4, 7, 1, 5, 6, 9, 2, 8, 3)
    assert parse_permutation(format_permutation(sigma)) == sigma


# ---------------------------------------------------------------------------
# quadrant geometry

def test_quadrant_counts_worked_example():
    sigma = (4, 7, 1, 5, 6, 9, 2, 8, 3)
    assert quadrant_counts(sigma, 4) == (3, 1, 2, 2)


@given(perms)
def test_quadrant_counts_sum_to_n_minus_1(sigma):
    n = len(sigma)
    for i in range(1, n + 1):
        assert sum(quadrant_counts(sigma, i)) == n - 1


@given(perms)
def test_quadrant_counts_all_agrees_with_single(sigma):
    alls = quadrant_counts_all(sigma)
    assert alls == [quadrant_counts(sigma, i) for i in range(1, len(sigma) + 1)]


def test_matches_zero_pattern_everywhere():
    sigma = (3, 1, 2)
    p = parse_pattern("0,0,0,0")
    assert mmp_count(sigma, p) == 3


def test_all_empty_pattern():
    p = parse_pattern("e,e,e,e")
    assert mmp_count((1,), p) == 1
    assert mmp_count((1, 2), p) == 0


def test_mmp_count_worked_example():
    # positions 4 and 5 of 471569283 satisfy (2,1,2,1); no others do
    assert mmp_count(parse_permutation("471569283"), parse_pattern("2,1,2,1")) == 2


@given(perms)
def test_empty_demand_is_monotone_restriction(sigma):
    loose = parse_pattern("1,0,0,0")
    tight = PatternSpec(1, EMPTY, 0, 0)
    for i in range(1, len(sigma) + 1):
        if matches(sigma, i, tight):
            assert matches(sigma, i, loose)


# ---------------------------------------------------------------------------
# 132-avoidance

def test_is_132_avoiding_examples():
    assert not is_132_avoiding((4, 7, 1, 5, 6, 9, 2, 8, 3))
    assert is_132_avoiding((5, 6, 4, 7, 3, 1, 2))
    assert is_132_avoiding(())
    assert is_132_avoiding((1,))
    assert not is_132_avoiding((1, 3, 2))


def test_is_132_avoiding_brute_cross_check():
    def contains_132(sigma):
        return any(
            sigma[i] < sigma[k] < sigma[j]
            for i, j, k in itertools.combinations(range(len(sigma)), 3)
        )

    for n in range(7):
        for sigma in itertools.permutations(range(1, n + 1)):
            assert is_132_avoiding(sigma) == (not contains_132(sigma))


def test_enumerate_avoiders_counts_and_content():
    for n in range(9):
        seen = set()
        for sigma in enumerate_avoiders(n):
            assert is_132_avoiding(sigma)
            assert sigma not in seen
            seen.add(sigma)
        assert len(seen) == catalan(n)


def test_count_avoiders_through_12():
    for n in range(13):
        assert count_avoiders(n) == catalan(n)


# ---------------------------------------------------------------------------
# reduce / inverse

def test_reduce_examples():
    assert reduce((2, 7, 5, 4)) == (1, 4, 3, 2)
    assert reduce((9, 1, 7)) == (3, 1, 2)
    assert reduce(()) == ()


@given(st.lists(st.integers(-50, 50), max_size=8, unique=True))
def test_reduce_preserves_comparisons(word):
    red = reduce(tuple(word))
    assert sorted(red) == list(range(1, len(word) + 1))
    for i in range(len(word)):
        for j in range(len(word)):
            assert (word[i] < word[j]) == (red[i] < red[j])


@given(perms)
def test_inverse_is_an_involution(sigma):
    sigma = tuple(sigma)
    assert inverse(inverse(sigma)) == sigma


@given(perms)
def test_sym_lemma_pointwise(sigma):
    # the b/d swap mirrors match counts through inversion of the permutation
    sigma = tuple(sigma)
    p = parse_pattern("1,2,0,1")
    assert mmp_count(sigma, p) == mmp_count(inverse(sigma), p.sym())
