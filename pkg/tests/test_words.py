import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wittkit.arith import multinomial
from wittkit.errors import BudgetExceededError
from wittkit.necklace import necklace_count
from wittkit.words import (
    aperiodic_count,
    duval_lyndon,
    is_lyndon,
    lyndon_census,
    lyndon_words,
    lyndon_words_naive,
    multiset_permutations,
)


def test_is_lyndon_examples():
    assert is_lyndon((1, 1, 2))
    assert not is_lyndon((2, 1))
    assert not is_lyndon((1, 2, 1, 2))
    assert is_lyndon((1,))
    assert not is_lyndon((1, 1))
    with pytest.raises(ValueError):
        is_lyndon(())


def test_duval_order_and_completeness():
    words = list(duval_lyndon(4, 2))
    # lexicographic, and exactly the Lyndon words of length <= 4 over {1,2}
    assert words == sorted(words)
    assert all(is_lyndon(w) for w in words)
    brute = []
    for n in range(1, 5):
        for bits in range(2**n):
            w = tuple(1 + ((bits >> i) & 1) for i in reversed(range(n)))
            if is_lyndon(w):
                brute.append(w)
    assert set(words) == set(brute)
    assert (1, 1, 2) in words and (1, 2, 2) in words


def test_lyndon_words_examples():
    assert lyndon_words([1, 1]) == [(1, 2)]
    assert lyndon_words([2, 2]) == [(1, 1, 2, 2)]
    assert lyndon_words([1, 2]) == [(1, 2, 2)]
    assert lyndon_words([0, 2]) == []


def test_lyndon_extension():
    # appending the top letter to a Lyndon word stays Lyndon
    top = 3
    for w in duval_lyndon(8, 3):
        if w != (top,):
            assert is_lyndon(w + (top,)), w


def test_naive_oracle_agrees():
    for parts in [(1, 1), (2, 2), (1, 2), (2, 3), (1, 1, 1), (2, 2, 2), (3, 2, 1)]:
        assert lyndon_words(parts) == lyndon_words_naive(parts)
    with pytest.raises(BudgetExceededError):
        lyndon_words_naive((8, 8), budget=10)


def test_census_matches_per_content_listing():
    census = lyndon_census(3, 7)
    for parts in [(1, 1), (2, 2), (2, 3), (3, 3), (1, 2, 3), (2, 2, 2), (0, 2, 4)]:
        if sum(parts) > 7:
            continue
        key = tuple(parts) + (0,) * (3 - len(parts))
        assert census.get(key, 0) == len(lyndon_words(parts)), parts


def test_aperiodic_count_examples():
    assert aperiodic_count([2, 3]) == 2
    assert aperiodic_count([1, 1, 1]) == 2
    for m in range(2, 7):
        assert aperiodic_count([m]) == 0
    assert aperiodic_count([1]) == 1


def test_aperiodic_budget():
    with pytest.raises(BudgetExceededError):
        aperiodic_count([8, 8])
    assert aperiodic_count([8, 8], budget=16) == necklace_count([8, 8])


def test_aperiodic_count_matches_lyndon_listing():
    for parts in [(1, 1), (2, 2), (2, 3), (4, 3), (1, 2, 3), (2, 2, 2)]:
        assert aperiodic_count(parts) == len(lyndon_words(parts)), parts


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=3).filter(
    lambda c: 1 <= sum(c) <= 8))
def test_three_routes_agree(parts):
    count = necklace_count(parts)
    assert aperiodic_count(parts) == count
    assert len(lyndon_words(parts)) == count


def test_multiset_permutations():
    perms = list(multiset_permutations([1, 1, 2]))
    assert perms == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    items = [1, 2, 2, 3]
    got = list(multiset_permutations(items))
    assert len(got) == multinomial(4, [1, 2, 1])
    assert len(set(got)) == len(got)
    assert got == sorted(got)
