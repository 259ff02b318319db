"""Cost-rate evaluation.

Three independent routes to the same number: the inclusion-exclusion
formula over lcm's (``cost_rate``), direct counting of maintenance epochs
over one period (``union_density``), and a replay of the maintenance
timeline (``simulated_cost``).
"""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from fcmj.config import DEFAULT_LIMITS
from fcmj.model import Instance, check_schedule, format_rational, node_key, trigger_set
from fcmj.numtheory import _lcm2, lcm


class SubsetCapExceeded(ValueError):
    pass


class PeriodCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class CostBreakdown:
    per_component: dict[str, Fraction]
    per_module: dict[str, Fraction]
    total: Fraction

    def to_dict(self) -> dict:
        return {
            "per_component": {k: format_rational(v) for k, v in self.per_component.items()},
            "per_module": {k: format_rational(v) for k, v in self.per_module.items()},
            "total": format_rational(self.total),
        }


def _distinct(cycle_times: Iterable[int]) -> list[int]:
    qs = sorted(set(cycle_times))
    if not qs:
        raise ValueError("cycle times must be nonempty")
    if qs[0] < 1:
        raise ValueError(f"cycle times must be positive, got {qs[0]}")
    return qs


def module_cost_rate(setup, cycle_times: Iterable[int], subset_cap: int = DEFAULT_LIMITS.subset_cap) -> Fraction:
    """``setup`` times the density of times divisible by at least one cycle time.

    Alternating sum over nonempty subsets of the distinct cycle times of
    (-1)^(|S|+1) / lcm(S). Subsets are grown one value at a time and terms
    with equal lcm are merged, so the work is usually far below 2^n.
    """
    qs = _distinct(cycle_times)
    if len(qs) > subset_cap:
        raise SubsetCapExceeded(
            f"{len(qs)} distinct cycle times exceed the subset cap {subset_cap}; "
            "use union_density or simulated_cost instead"
        )
    # lcm -> net signed count of subsets with that lcm
    terms: Counter[int] = Counter()
    for q in qs:
        new: Counter[int] = Counter({q: 1})
        for l, coef in terms.items():
            new[_lcm2(l, q)] -= coef
        terms.update(new)
    density = sum((Fraction(coef, l) for l, coef in terms.items() if coef), Fraction(0))
    return Fraction(setup) * density


def union_density(cycle_times: Iterable[int], period_cap: int = DEFAULT_LIMITS.period_cap) -> Fraction:
    """Fraction of t in 1..lcm(Q) divisible by some q in Q, by explicit marking."""
    qs = _distinct(cycle_times)
    period = lcm(qs)
    if period > period_cap:
        raise PeriodCapExceeded(f"period {period} exceeds the period cap {period_cap}")
    hit = bytearray(period + 1)
    for q in qs:
        hit[q::q] = b"\x01" * (period // q)
    return Fraction(sum(hit), period)


def cost_rate(
    instance: Instance,
    schedule: Mapping[str, int],
    subset_cap: int = DEFAULT_LIMITS.subset_cap,
) -> CostBreakdown:
    check_schedule(instance, schedule)
    per_component = {
        c: Fraction(instance.component_map[c].setup_cost) / schedule[c] for c in instance.component_ids
    }
    per_module = {}
    for m in sorted(instance.module_map, key=node_key):
        members = trigger_set(instance, m)
        if members:
            per_module[m] = module_cost_rate(
                instance.module_map[m].setup_cost, (schedule[c] for c in members), subset_cap
            )
        else:
            per_module[m] = Fraction(0)
    total = sum(per_component.values(), Fraction(0)) + sum(per_module.values(), Fraction(0))
    return CostBreakdown(per_component, per_module, total)


def simulated_cost(instance: Instance, schedule: Mapping[str, int], horizon: int | None = None) -> Fraction:
    """Average setup cost per period over t = 1..horizon.

    Replays the maintenance events in time order. Each component pays at
    multiples of its cycle time; a module pays once per epoch in which any
    component of its trigger set is maintained. Time 0 pays nothing. The
    default horizon is one full period, lcm of all cycle times.
    """
    check_schedule(instance, schedule)
    if horizon is None:
        horizon = lcm(schedule[c] for c in instance.component_ids)
    if isinstance(horizon, bool) or not isinstance(horizon, int) or horizon < 1:
        raise ValueError(f"horizon must be a positive integer, got {horizon!r}")

    events = [(schedule[c], c) for c in instance.component_ids]
    heapq.heapify(events)
    paid = Fraction(0)
    while events and events[0][0] <= horizon:
        t = events[0][0]
        opened: set[str] = set()
        while events and events[0][0] == t:
            _, c = heapq.heappop(events)
            paid += instance.component_map[c].setup_cost
            opened.update(instance.triggering_modules[c])
            heapq.heappush(events, (t + schedule[c], c))
        for m in opened:
            paid += instance.module_map[m].setup_cost
    return paid / horizon
