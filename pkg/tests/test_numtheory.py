import pytest
from hypothesis import given, strategies as st

from fcmj.numtheory import gcd, is_prime, lcm
from oracles import gcd_by_search, lcm_by_search, prime_by_trial

pos = st.integers(min_value=1, max_value=10**6)


@pytest.mark.parametrize("a,b,expected", [(12, 8, 4), (10, 15, 5), (7, 1, 1), (1, 7, 1), (9, 9, 9)])
def test_gcd_examples(a, b, expected):
    assert gcd(a, b) == expected


@pytest.mark.parametrize("values,expected", [([4, 6], 12), ([9], 9), ([2, 3, 5], 30), ([6, 4, 6], 12)])
def test_lcm_examples(values, expected):
    assert lcm(values) == expected


def test_lcm_empty():
    with pytest.raises(ValueError, match="lcm of empty set"):
        lcm([])


@pytest.mark.parametrize("bad", [0, -3])
def test_nonpositive_rejected(bad):
    with pytest.raises(ValueError):
        gcd(bad, 3)
    with pytest.raises(ValueError):
        lcm([3, bad])


@given(pos, pos)
def test_gcd_lcm_product(a, b):
    assert gcd(a, b) * lcm([a, b]) == a * b
    assert gcd(a, b) == gcd(b, a)


@given(st.lists(st.integers(1, 60), min_size=1, max_size=5))
def test_lcm_is_least_common_multiple(values):
    m = lcm(values)
    assert all(m % v == 0 for v in values)
    prod = 1
    for v in values:
        prod *= v
    assert prod % m == 0
    assert m == lcm_by_search(values)
    assert m == lcm(list(reversed(values)))


@given(st.integers(1, 300), st.integers(1, 300))
def test_gcd_against_search(a, b):
    assert gcd(a, b) == gcd_by_search(a, b)


def test_is_prime_examples():
    assert is_prime(2)
    assert not is_prime(1)
    assert not is_prime(561)
    assert is_prime(97)


def test_is_prime_matches_trial_division_to_1e5():
    mismatches = [n for n in range(1, 10**5 + 1) if is_prime(n) != prime_by_trial(n)]
    assert mismatches == []


@pytest.mark.parametrize(
    "n,expected",
    [
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (2**61 - 1, True),
        (2**64 - 59, True),
        (3825123056546413051, False),  # strong pseudoprime to bases up to 23
        ((2**31 - 1) * (2**61 - 1), False),
        (318665857834031151167461, False),  # strong pseudoprime to bases up to 37
    ],
)
def test_is_prime_hard_cases(n, expected):
    assert is_prime(n) is expected
