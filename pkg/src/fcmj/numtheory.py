"""Integer primitives: gcd, lcm of a collection, deterministic primality."""

import math
from functools import reduce
from typing import Iterable

# Strong-probable-prime to all prime bases up to 41 is a proof of primality
# below this bound (Sorenson & Webster, 2015).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981


def _check_pos(x: int, name: str = "value") -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"{name} must be an int, got {type(x).__name__}")
    if x < 1:
        raise ValueError(f"{name} must be a positive integer, got {x}")
    return x


def gcd(a: int, b: int) -> int:
    return math.gcd(_check_pos(a, "a"), _check_pos(b, "b"))


def _lcm2(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


def lcm(values: Iterable[int]) -> int:
    """Least common multiple, folded pairwise through gcd."""
    vals = [_check_pos(v) for v in values]
    if not vals:
        raise ValueError("lcm of empty set")
    return reduce(_lcm2, vals)


def is_prime_trial(n: int) -> bool:
    """Trial division up to isqrt(n). Exact, slow for large n."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    r = math.isqrt(n)
    while d <= r:
        if n % d == 0:
            return False
        d += 2
    return True


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Exact primality test.

    Miller-Rabin with a fixed witness set is deterministic below
    ``MR_DETERMINISTIC_LIMIT``; above it the witness test only filters
    composites and survivors are confirmed by trial division.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if not all(_strong_probable_prime(n, a, d, s) for a in _MR_BASES):
        return False
    if n < MR_DETERMINISTIC_LIMIT:
        return True
    return is_prime_trial(n)
