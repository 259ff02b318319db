"""Exact minimization of the cost rate over integer cycle times.

Depth-first branch and bound. Components are fixed in ``node_key`` order and
each cycle time is tried from its limit downward. Two facts drive the
search:

* every term of ``partial_lower_bound`` is nonincreasing in each fixed cycle
  time, so once a value is pruned all smaller values at that depth are too;
* with descending enumeration a later leaf is lexicographically smaller than
  every earlier one, so replacing the incumbent on ties yields the
  lexicographically smallest optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping

from fcmj.config import DEFAULT_LIMITS
from fcmj.model import Component, Instance, Module, format_rational, require_valid, trigger_set
from fcmj.numtheory import lcm
from fcmj.objective import cost_rate


class BudgetExceeded(RuntimeError):
    def __init__(self, message: str, incumbent: SolveReport | None):
        super().__init__(message)
        self.incumbent = incumbent


@dataclass(frozen=True)
class SolveReport:
    optimal_schedule: dict[str, int]
    optimal_value: Fraction
    evaluations: int = 0
    pruned: int = 0

    def to_dict(self) -> dict:
        return {
            "optimal_schedule": dict(self.optimal_schedule),
            "optimal_value": format_rational(self.optimal_value),
            "evaluations": self.evaluations,
            "pruned": self.pruned,
        }


def partial_lower_bound(instance: Instance, fixed: Mapping[str, int]) -> Fraction:
    """Lower bound on the cost of every feasible completion of ``fixed``.

    Unfixed components are charged at their cycle limit. A module is charged
    only for its most frequent member, which undercounts the union of the
    maintenance progressions but never overcounts it.
    """
    inv = {}
    bound = Fraction(0)
    for c, comp in instance.component_map.items():
        q = fixed.get(c, comp.cycle_limit)
        inv[c] = Fraction(1, q)
        bound += Fraction(comp.setup_cost) * inv[c]
    for m, mod in instance.module_map.items():
        members = trigger_set(instance, m)
        if members and mod.setup_cost:
            bound += Fraction(mod.setup_cost) * max(inv[c] for c in members)
    return bound


def solve_exact(
    instance: Instance,
    budget: int = DEFAULT_LIMITS.budget,
    subset_cap: int = DEFAULT_LIMITS.subset_cap,
) -> SolveReport:
    """Global minimum with lexicographic tie-break (component order, then smaller q).

    ``budget`` caps the number of full objective evaluations; running out
    raises BudgetExceeded carrying the incumbent, never an unproven answer.
    """
    require_valid(instance)
    order = instance.component_ids
    limits = [instance.component_map[c].cycle_limit for c in order]
    n = len(order)
    fixed: dict[str, int] = {}
    best_value: Fraction | None = None
    best_schedule: dict[str, int] | None = None
    evaluations = 0
    pruned = 0

    def incumbent() -> SolveReport | None:
        if best_schedule is None:
            return None
        return SolveReport(dict(best_schedule), best_value, evaluations, pruned)

    def descend(depth: int) -> None:
        nonlocal best_value, best_schedule, evaluations, pruned
        c = order[depth]
        for q in range(limits[depth], 0, -1):
            fixed[c] = q
            if best_value is not None and partial_lower_bound(instance, fixed) > best_value:
                pruned += q
                break
            if depth + 1 < n:
                descend(depth + 1)
                continue
            if evaluations >= budget:
                raise BudgetExceeded(
                    f"search budget of {budget} evaluations exhausted before optimality was proven",
                    incumbent(),
                )
            evaluations += 1
            value = cost_rate(instance, fixed, subset_cap).total
            if best_value is None or value <= best_value:
                best_value = value
                best_schedule = {k: fixed[k] for k in order}
        del fixed[c]

    descend(0)
    return SolveReport(best_schedule, best_value, evaluations, pruned)


def two_component_instance(K0, K1, K2, f1: int, f2: int) -> Instance:
    """One module "0" holding components "1" and "2"."""
    return Instance(
        components=(Component("1", Fraction(K1), f1), Component("2", Fraction(K2), f2)),
        modules=(Module("0", Fraction(K0)),),
        edges=(("0", "1"), ("0", "2")),
        root="0",
    )


def solve_two_component(K0, K1, K2, f1: int, f2: int) -> SolveReport:
    """Minimize (K0+K1)/q1 + (K0+K2)/q2 - K0/lcm(q1, q2) over the box.

    Same search, bound and tie-break as ``solve_exact`` on the equivalent
    one-module instance, specialized to integer cross-multiplication: costs
    are scaled to integers (argmin is invariant under positive scaling) and
    every candidate value is kept as a numerator over lcm(q1, q2).
    """
    costs = [Fraction(K0), Fraction(K1), Fraction(K2)]
    if any(k < 0 for k in costs):
        raise ValueError("setup costs must be nonnegative")
    for name, f in (("f1", f1), ("f2", f2)):
        if isinstance(f, bool) or not isinstance(f, int) or f < 1:
            raise ValueError(f"{name} must be a positive integer, got {f!r}")
    scale = lcm(k.denominator for k in costs)
    k0, k1, k2 = (int(k * scale) for k in costs)
    a, b = k0 + k1, k0 + k2

    best_num = best_den = None  # incumbent value best_num / best_den (scaled)
    best = None
    evaluations = 0
    pruned = 0
    for q1 in range(f1, 0, -1):
        # bound with q2 at its limit: k1/q1 + k2/f2 + k0/min(q1, f2), over q1*f2
        if best is not None:
            lb_num = k1 * f2 + k2 * q1 + k0 * max(q1, f2)
            if lb_num * best_den > best_num * q1 * f2:
                pruned += q1
                break
        for q2 in range(f2, 0, -1):
            if best is not None:
                lb_num = k1 * q2 + k2 * q1 + k0 * max(q1, q2)
                if lb_num * best_den > best_num * q1 * q2:
                    pruned += q2
                    break
            g = gcd(q1, q2)
            L = q1 // g * q2
            num = a * (L // q1) + b * (L // q2) - k0
            evaluations += 1
            if best is None or num * best_den <= best_num * L:
                best_num, best_den, best = num, L, (q1, q2)
    value = Fraction(best_num, best_den * scale)
    return SolveReport({"1": best[0], "2": best[1]}, value, evaluations, pruned)
