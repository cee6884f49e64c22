"""Search budgets shared by the exhaustive solvers.

Every exhaustive routine estimates its cost up front and raises
:class:`BudgetExceeded` instead of silently truncating.  The environment
variable ``NICHOLS_ZN_BUDGET`` scales the default step budget.
"""

import os

DEFAULT_STEP_BUDGET = 10**8
DEFAULT_PRIME_POWER_BOUND = 10**6
DEFAULT_ORBIT_BUDGET = 512

ENV_VAR = "NICHOLS_ZN_BUDGET"


class BudgetExceeded(RuntimeError):
    """An exhaustive search would exceed its configured budget."""


class UnsupportedModulus(BudgetExceeded):
    """A prime-power factor is too large for the exhaustive fallback."""


def step_budget(override=None):
    if override is not None:
        return int(override)
    raw = os.environ.get(ENV_VAR)
    if raw:
        try:
            value = int(float(raw))
        except ValueError:
            raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
        if value <= 0:
            raise ValueError(f"{ENV_VAR} must be positive, got {value}")
        return value
    return DEFAULT_STEP_BUDGET


def check(cost, budget=None, what="search"):
    limit = step_budget(budget)
    if cost > limit:
        raise BudgetExceeded(f"{what} needs ~{cost} steps, budget is {limit}")
