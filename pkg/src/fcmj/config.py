from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    """Work caps shared by the evaluators, the solver and the reduction checks."""

    subset_cap: int = 20  # distinct cycle times per module for inclusion-exclusion
    period_cap: int = 10**7  # longest period union_density will count over
    budget: int = 10**8  # leaf evaluations before solve_exact gives up
    verify_cap: int = 10**4  # largest M for the quadratic reduction check


DEFAULT_LIMITS = Limits()
