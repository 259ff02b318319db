"""Brute-force references, kept free of the code paths they check."""

import itertools
from fractions import Fraction

from fcmj.model import node_key
from fcmj.objective import cost_rate


def prime_by_trial(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def lcm_by_search(values):
    top = max(values)
    m = top
    while any(m % v for v in values):
        m += top
    return m


def gcd_by_search(a, b):
    return max(d for d in range(1, min(a, b) + 1) if a % d == 0 and b % d == 0)


def count_density(values):
    """Share of t in 1..prod(values) hit by some progression; prod is a common period."""
    period = 1
    for v in values:
        period *= v
    hits = sum(1 for t in range(1, period + 1) if any(t % v == 0 for v in values))
    return Fraction(hits, period)


def sc_objective(K0, K1, K2, q1, q2):
    """Two-component objective written out by hand."""
    L = lcm_by_search([q1, q2])
    return Fraction(K0 + K1, q1) + Fraction(K0 + K2, q2) - Fraction(K0, L)


def sc_grid(K0, K1, K2, f1, f2):
    """(value, (q1, q2)) minimum over the whole grid, ties to smallest (q1, q2)."""
    return min(
        (sc_objective(K0, K1, K2, q1, q2), (q1, q2))
        for q1 in range(1, f1 + 1)
        for q2 in range(1, f2 + 1)
    )


def exhaustive_solve(instance):
    """Pruning-free enumeration of every feasible schedule."""
    order = sorted(instance.component_map, key=node_key)
    ranges = [range(1, instance.component_map[c].cycle_limit + 1) for c in order]
    best = None
    for qs in itertools.product(*ranges):
        value = cost_rate(instance, dict(zip(order, qs))).total
        if best is None or (value, qs) < best:
            best = (value, qs)
    return best[0], dict(zip(order, best[1]))


def step2_sweep(M):
    """{q2: V(q2)} computed with lcm by search."""
    return {q2: Fraction(1, q2) - Fraction(1, lcm_by_search([M, q2])) for q2 in range(1, M - 1)}
