"""Enumeration budgets shared by the brute-force scans and poset builders.

The environment variable ``SEGRELAT_BUDGET`` overrides every budget at once;
explicit ``budget=`` arguments take precedence over both.
"""

import os

DEFAULT_TUPLE_BUDGET = 10_000_000
DEFAULT_ELEMENT_BUDGET = 20_000
DEFAULT_CHAIN_BUDGET = 2_000_000

ENV_VAR = "SEGRELAT_BUDGET"


class EnumerationBudgetError(RuntimeError):
    """A brute-force enumeration would exceed the configured budget."""


def _resolve(default: int, override) -> int:
    if override is not None:
        return int(override)
    raw = os.environ.get(ENV_VAR)
    if raw:
        return int(raw)
    return default


def tuple_budget(override=None) -> int:
    return _resolve(DEFAULT_TUPLE_BUDGET, override)


def element_budget(override=None) -> int:
    return _resolve(DEFAULT_ELEMENT_BUDGET, override)


def chain_budget(override=None) -> int:
    return _resolve(DEFAULT_CHAIN_BUDGET, override)
