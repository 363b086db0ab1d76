import logging
import math
from typing import Optional

import numpy as np

from ...config import DEFAULTS
from ...core.PermFamily import PermFamily
from ...core.Permutation import Permutation
from ...exceptions import BudgetExceededError, ConstructionError
from ..inspections.verify_t_shattering import verify_t_shattering

logger = logging.getLogger(__name__)


def build_scrambling_family(n: int,
                            k: int,
                            seed: int = 0,
                            *,
                            mode: str = 'auto',
                            samples: Optional[int] = None,
                            budget: Optional[int] = None,
                            max_retries: Optional[int] = None,
                            jobs: int = 1,
                            ) -> PermFamily:
    r"""Builds a family of uniformly random permutations of ``[n]`` that
    shatters every k-subset (all ``k!`` patterns), verified by
    :func:`verify_t_shattering` with ``t = k!``.

    The first batch has ``ceil(k! * ln(C(n, k) * k!))`` members and each
    failed verification appends a quarter of that, up to ``max_retries``
    times. The family size grows like ``log n``.

    Basic usage:
        >>> family = permshatter.build_scrambling_family(6, 2, seed=1)
        >>> permshatter.min_shatter(family, 2)[0]
        2

    ``mode``:
        ``'exhaustive'`` enumerates all k-subsets, ``'sampled'`` checks
        ``samples`` random ones (default ``PERMSHATTER_LEX_SAMPLES``) and
        ``'auto'`` picks exhaustive within the subset budget.

    .. error::

        Families are materialised, so ``n`` times the family size is capped
        by the subset budget; beyond it :exc:`BudgetExceededError` is raised.
    """
    for name, value in (('n', n), ('k', k), ('seed', seed)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"'{name}' must be 'int'")
    if n < 1 or not 1 <= k <= n:
        raise ValueError("'k' must lie between 1 and 'n'")
    if mode not in ('auto', 'exhaustive', 'sampled'):
        raise ValueError("'mode' must be 'auto', 'exhaustive' or 'sampled'")
    if budget is None:
        budget = DEFAULTS.subset_budget
    if samples is None:
        samples = DEFAULTS.lex_samples
    if max_retries is None:
        max_retries = DEFAULTS.max_retries
    t = math.factorial(k)
    subsets = math.comb(n, k)
    first_batch = max(1, math.ceil(t * math.log(subsets * t)))
    batch = max(1, first_batch // 4)
    if n * first_batch > budget:
        raise BudgetExceededError(f'{first_batch} permutations of [{n}] '
                                  f'exceed the budget of {budget} entries')
    if mode == 'auto':
        mode = 'exhaustive' if subsets <= budget else 'sampled'
    logger.info('building a %d-scrambling family of [%d]: first batch %d, '
                '%s verification', k, n, first_batch, mode)
    rng = np.random.default_rng(seed)
    members = [Permutation.random(n, rng) for _ in range(first_batch)]
    for attempt in range(max_retries + 1):
        family = PermFamily(members, n=n)
        certificate = verify_t_shattering(family,
                                          k,
                                          t,
                                          mode=mode,
                                          samples=samples,
                                          seed=seed,
                                          budget=budget,
                                          jobs=jobs,
                                          )
        if certificate.passed:
            logger.info('scrambling family found with %d members', len(family))
            return family
        logger.debug('attempt %d failed at %s; appending %d members',
                     attempt, certificate.witness, batch)
        if attempt < max_retries:
            members.extend(Permutation.random(n, rng) for _ in range(batch))
    raise ConstructionError(f'no {k}-scrambling family of [{n}] found with '
                            f'{len(members)} members')
