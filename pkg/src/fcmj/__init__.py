"""Exact tools for frequency-constrained maintenance jobs on hierarchical systems."""

from fcmj.model import Component, Instance, Module, TriggerMode, trigger_set, validate
from fcmj.numtheory import gcd, is_prime, lcm
from fcmj.objective import CostBreakdown, cost_rate, module_cost_rate, simulated_cost, union_density
from fcmj.reduction import (
    FactorTrace,
    PrimeLeaf,
    ReductionReport,
    build_factoring_instance,
    factorize,
    find_nontrivial_divisor,
    step2_objective,
    verify_reduction,
)
from fcmj.solver import BudgetExceeded, SolveReport, partial_lower_bound, solve_exact, solve_two_component

__all__ = [
    "BudgetExceeded",
    "Component",
    "CostBreakdown",
    "FactorTrace",
    "Instance",
    "Module",
    "PrimeLeaf",
    "ReductionReport",
    "SolveReport",
    "TriggerMode",
    "build_factoring_instance",
    "cost_rate",
    "factorize",
    "find_nontrivial_divisor",
    "gcd",
    "is_prime",
    "lcm",
    "module_cost_rate",
    "partial_lower_bound",
    "simulated_cost",
    "solve_exact",
    "solve_two_component",
    "step2_objective",
    "trigger_set",
    "union_density",
    "validate",
    "verify_reduction",
]
