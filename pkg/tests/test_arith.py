import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wittkit.arith import (
    bernoulli,
    divisors,
    gcd_all,
    moebius,
    multinomial,
    nth_prime,
    primes_up_to,
)


def test_moebius_small_values():
    assert [moebius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_moebius_rejects_zero():
    with pytest.raises(ValueError):
        moebius(0)


def test_moebius_divisor_sum_vanishes():
    # sum_{d|m} mu(d) is 1 at m=1 and 0 beyond
    for m in range(1, 10_001):
        total = sum(moebius(d) for d in divisors(m))
        assert total == (1 if m == 1 else 0), m


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(49) == [1, 7, 49]


def test_multinomial_examples():
    assert multinomial(4, [2, 2]) == 6
    assert multinomial(7, [7]) == 1
    # direct factorial evaluation
    assert multinomial(6, [1, 2, 3]) == math.factorial(6) // (
        math.factorial(1) * math.factorial(2) * math.factorial(3)
    )
    assert multinomial(6, [1, 2, 3]) == 60


def test_multinomial_rejects_bad_parts():
    with pytest.raises(ValueError):
        multinomial(5, [2, 2])
    with pytest.raises(ValueError):
        multinomial(1, [2, -1])


@given(st.lists(st.integers(0, 8), min_size=1, max_size=5))
def test_multinomial_symmetric(parts):
    n = sum(parts)
    assert multinomial(n, parts) == multinomial(n, sorted(parts))
    assert multinomial(n, parts) == multinomial(n, sorted(parts, reverse=True))


def test_primes_up_to():
    assert primes_up_to(10) == [2, 3, 5, 7]
    assert primes_up_to(1) == []
    assert primes_up_to(2) == [2]
    assert len(primes_up_to(10**6)) == 78498


def test_nth_prime():
    assert nth_prime(1) == 2
    assert nth_prime(4) == 7
    assert nth_prime(25) == 97
    assert nth_prime(1000) == 7919
    with pytest.raises(ValueError):
        nth_prime(0)


def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_recurrence():
    for k in range(1, 61):
        total = sum(math.comb(k + 1, j) * bernoulli(j) for j in range(k + 1))
        assert total == 0, k


def test_gcd_all():
    assert gcd_all([4, 6, 0]) == 2
    assert gcd_all([]) == 0
    assert gcd_all([0, 0]) == 0
