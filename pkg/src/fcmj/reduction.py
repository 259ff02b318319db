"""Factoring integers with a two-component maintenance solver as the oracle.

For M >= 4 the instance FCMJ_M has one module (cost 1) over component 1
(cost M^2(M-1)-1, limit M) and component 2 (cost 0, limit M-2). Its optimum
has q1 = M, and for composite M the optimal q2 shares a factor with M, so
gcd(q2, M) is a proper divisor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Union

from fcmj.config import DEFAULT_LIMITS
from fcmj.model import Instance, format_rational, instance_to_dict
from fcmj.numtheory import is_prime
from fcmj.solver import SolveReport, solve_two_component, two_component_instance


class ReductionError(ValueError):
    pass


def _check_m(M: int, minimum: int = 4) -> None:
    if isinstance(M, bool) or not isinstance(M, int):
        raise ReductionError(f"M must be an int, got {type(M).__name__}")
    if M < minimum:
        raise ReductionError(f"M must be at least {minimum}, got {M}")


def factoring_parameters(M: int) -> tuple[int, int, int, int, int]:
    """(K0, K1, K2, f1, f2) of FCMJ_M."""
    _check_m(M)
    return 1, M * M * (M - 1) - 1, 0, M, M - 2


def build_factoring_instance(M: int) -> Instance:
    return two_component_instance(*factoring_parameters(M))


def step1_objective(M: int, q1: int, q2: int) -> Fraction:
    """U(q1, q2) = (1 + K1)/q1 + 1/q2 - 1/lcm(q1, q2) on FCMJ_M."""
    _, K1, _, _, _ = factoring_parameters(M)
    L = q1 // gcd(q1, q2) * q2
    return Fraction(1 + K1, q1) + Fraction(1, q2) - Fraction(1, L)


def step2_objective(M: int, q2: int) -> Fraction:
    """V(q2) = 1/q2 - 1/lcm(M, q2), the part of U that still depends on q2 once q1 = M."""
    _check_m(M)
    if isinstance(q2, bool) or not isinstance(q2, int) or not 1 <= q2 <= M - 2:
        raise ReductionError(f"q2 must lie in 1..{M - 2}, got {q2!r}")
    return Fraction(1, q2) - Fraction(gcd(M, q2), M * q2)


def solve_factoring_instance(M: int) -> SolveReport:
    return solve_two_component(*factoring_parameters(M))


def find_nontrivial_divisor(M: int) -> int:
    """gcd(q2, M) for the solver's optimal q2 on FCMJ_M."""
    _check_m(M)
    if is_prime(M):
        raise ReductionError(f"input is prime: {M}")
    return _split(M)[1]


def _split(M: int) -> tuple[SolveReport, int]:
    report = solve_factoring_instance(M)
    q1, q2 = report.optimal_schedule["1"], report.optimal_schedule["2"]
    d = gcd(q2, M)
    if q1 != M or not 1 < d < M:
        # only reachable if the solver were wrong
        raise ReductionError(f"reduction failed on M={M}: solver returned ({q1}, {q2})")
    return report, d


@dataclass(frozen=True)
class PrimeLeaf:
    prime: int

    def to_dict(self) -> dict:
        return {"prime": self.prime}


@dataclass(frozen=True)
class FactorTrace:
    target: int
    instance: Instance
    q1: int
    q2: int
    divisor: int
    children: tuple[Union["FactorTrace", PrimeLeaf], Union["FactorTrace", PrimeLeaf]]
    evaluations: int = 0

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "instance": instance_to_dict(self.instance),
            "solved": [self.q1, self.q2],
            "divisor": self.divisor,
            "evaluations": self.evaluations,
            "children": [child.to_dict() for child in self.children],
        }


def _factor_tree(M: int) -> tuple[list[int], FactorTrace | PrimeLeaf]:
    if is_prime(M):
        return [M], PrimeLeaf(M)
    report, d = _split(M)
    left, left_trace = _factor_tree(d)
    right, right_trace = _factor_tree(M // d)
    trace = FactorTrace(
        target=M,
        instance=build_factoring_instance(M),
        q1=report.optimal_schedule["1"],
        q2=report.optimal_schedule["2"],
        divisor=d,
        children=(left_trace, right_trace),
        evaluations=report.evaluations,
    )
    return left + right, trace


def factorize(M: int) -> tuple[list[int], FactorTrace | PrimeLeaf | None]:
    """Sorted prime factors of M with multiplicity, and the split tree (None for M = 1)."""
    _check_m(M, minimum=1)
    if M == 1:
        return [], None
    factors, trace = _factor_tree(M)
    return sorted(factors), trace


@dataclass(frozen=True)
class ReductionReport:
    M: int
    prime: bool
    step1_ok: bool
    step1_margin: tuple[Fraction, Fraction]  # (min U over q1 < M, U at q1 = M and solver q2)
    lemma_ok: bool | None  # None for prime M
    coprime_min_V: Fraction | None
    optimal_V: Fraction
    optimal_q2: int
    divisor: int | None
    divisor_ok: bool | None

    @property
    def ok(self) -> bool:
        return self.step1_ok and self.lemma_ok is not False and self.divisor_ok is not False

    def to_dict(self) -> dict:
        def fr(x):
            return None if x is None else format_rational(x)

        return {
            "M": self.M,
            "prime": self.prime,
            "step1_ok": self.step1_ok,
            "step1_margin": [fr(x) for x in self.step1_margin],
            "lemma_ok": self.lemma_ok,
            "coprime_min_V": fr(self.coprime_min_V),
            "optimal_V": fr(self.optimal_V),
            "optimal_q2": self.optimal_q2,
            "divisor": self.divisor,
            "divisor_ok": self.divisor_ok,
            "ok": self.ok,
        }


def _min_step1_tail(q1: int, f2: int) -> Fraction:
    """min over 1 <= q2 <= f2 of 1/q2 - 1/lcm(q1, q2), by exhaustive evaluation."""
    best_num, best_den = None, None
    for q2 in range(1, f2 + 1):
        L = q1 // gcd(q1, q2) * q2
        num = L // q2 - 1
        if best_num is None or num * best_den < best_num * L:
            best_num, best_den = num, L
    return Fraction(best_num, best_den)


def verify_reduction(M: int, cap: int = DEFAULT_LIMITS.verify_cap) -> ReductionReport:
    """Exhaustively check both steps of the reduction on FCMJ_M.

    Step 1: every (q1, q2) with q1 <= M-1 costs at least M^2, while the
    solver's optimum with q1 = M costs at most M^2 - M + 1. Lemma (composite
    M only): every q2 coprime to M has V(q2) > 1/M. Finally the solver's q2
    must give a proper divisor. Quadratic in M, hence the cap.
    """
    _check_m(M)
    if M > cap:
        raise ReductionError(f"M={M} exceeds the verification cap {cap}")
    _, K1, _, _, f2 = factoring_parameters(M)
    prime = is_prime(M)
    report = solve_factoring_instance(M)
    q1_star, q2_star = report.optimal_schedule["1"], report.optimal_schedule["2"]

    # (1 + K1)/q1 does not depend on q2, so the inner minimum covers every pair
    low = min(Fraction(1 + K1, q1) + _min_step1_tail(q1, f2) for q1 in range(1, M))
    incumbent = step1_objective(M, M, q2_star)
    step1_ok = q1_star == M and low >= M * M and incumbent <= M * M - M + 1 and incumbent < low

    values = {q2: step2_objective(M, q2) for q2 in range(1, f2 + 1)}
    optimal_V = min(values.values())
    coprime = [v for q2, v in values.items() if gcd(q2, M) == 1]
    coprime_min_V = min(coprime) if coprime else None
    solver_matches = values[q2_star] == optimal_V and report.optimal_value == incumbent

    if prime:
        return ReductionReport(M, True, step1_ok and solver_matches, (low, incumbent), None,
                               coprime_min_V, optimal_V, q2_star, None, None)
    lemma_ok = all(v > Fraction(1, M) for v in coprime)
    d = gcd(q2_star, M)
    divisor_ok = solver_matches and 1 < d < M and M % d == 0
    return ReductionReport(M, False, step1_ok, (low, incumbent), lemma_ok,
                           coprime_min_V, optimal_V, q2_star, d, divisor_ok)
