"""
config
======

Budgets and caps shared by every exhaustive computation of the package. Each
value can be overridden through an environment variable, which is read once
when the module is imported.
"""

import os
from dataclasses import dataclass
from typing import Mapping, Optional


@dataclass(frozen=True)
class Budgets:
    r"""Guardrails for the exhaustive and randomised computations.

    Basic usage:
        The defaults are available as :data:`permshatter.config.DEFAULTS`.

        >>> permshatter.config.DEFAULTS.subset_budget
        10000000

        Budgets can also be read from an arbitrary mapping, which is useful
        for tests:

        >>> Budgets.from_env({'PERMSHATTER_EXACT_CAP': '5'}).exact_cap
        5
    """

    subset_budget: int = 10 ** 7
    constraint_budget: int = 10 ** 7
    exact_cap: int = 7
    lex_samples: int = 10 ** 4
    max_retries: int = 64

    ENVIRONMENT = {
        'subset_budget': 'PERMSHATTER_SUBSET_BUDGET',
        'constraint_budget': 'PERMSHATTER_CONSTRAINT_BUDGET',
        'exact_cap': 'PERMSHATTER_EXACT_CAP',
        'lex_samples': 'PERMSHATTER_LEX_SAMPLES',
        'max_retries': 'PERMSHATTER_MAX_RETRIES',
    }

    def __post_init__(self) -> None:
        for name in self.ENVIRONMENT:
            value = getattr(self, name)
            if not isinstance(value, int):
                raise TypeError(f"'{name}' must be 'int'")
            if value < 1:
                raise ValueError(f"'{name}' must be a positive 'int'")

    @classmethod
    def from_env(cls,
                 environ: Optional[Mapping[str, str]] = None,
                 ) -> 'Budgets':
        r'Builds the budgets from ``os.environ`` or from a given mapping.'
        if environ is None:
            environ = os.environ
        values = {}
        for name, variable in cls.ENVIRONMENT.items():
            raw = environ.get(variable)
            if raw is None or raw.strip() == '':
                continue
            try:
                values[name] = int(raw.replace('_', ''))
            except ValueError:
                raise ValueError(f"environment variable {variable} must hold "
                                 f"an integer (got {raw!r})") from None
        return cls(**values)


DEFAULTS = Budgets.from_env()
