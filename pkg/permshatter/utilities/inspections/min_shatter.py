import logging
import math
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Optional

import numpy as np
from tqdm import tqdm

from ...config import DEFAULTS
from ...core._FamilyParent import _FamilyParent
from ...core._patterns import (
    chunk_size_for,
    count_distinct,
    pattern_codes,
    subset_chunks,
)
from ...exceptions import BudgetExceededError

logger = logging.getLogger(__name__)


def min_shatter(family: _FamilyParent,
                k: int,
                *,
                budget: Optional[int] = None,
                jobs: int = 1,
                progress: bool = False,
                ) -> tuple:
    r"""Enumerates every k-subset of ``[n]`` and returns the least number of
    patterns the family induces on one of them, together with the
    lexicographically least subset attaining it.

    Basic usage:
        >>> family = permshatter.monotone_family(5, 1)
        >>> permshatter.min_shatter(family, 3)
        (1, (1, 2, 3))
        >>> family = permshatter.monotone_family(5, 2)
        >>> permshatter.min_shatter(family, 3)
        (2, (1, 2, 3))

    ``jobs``:
        Splits the enumeration by least subset element over a pool of worker
        processes. The result does not depend on ``jobs``.

    ``progress``:
        Shows a ``tqdm`` progress bar over the subset chunks.

    .. error::

        The number of k-subsets is capped by ``budget`` (default
        ``PERMSHATTER_SUBSET_BUDGET``). Beyond it, use
        :func:`verify_t_shattering` in sampled mode:

        >>> family = permshatter.monotone_family(1000, 2)
        >>> permshatter.min_shatter(family, 4, budget=10 ** 6)
        BudgetExceededError: C(1000, 4) = 41417124750 subsets exceed the
        budget of 1000000
    """
    if not isinstance(family, _FamilyParent):
        raise TypeError("'family' must be 'PermFamily' or 'CubeFamily'")
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError("'k' must be 'int'")
    if not 1 <= k <= family.n:
        raise ValueError(f"'k' must lie between 1 and {family.n}")
    if not isinstance(jobs, int) or jobs < 1:
        raise ValueError("'jobs' must be a positive 'int'")
    if not isinstance(progress, bool):
        raise TypeError("'progress' must be 'bool'")
    if len(family) == 0:
        raise ValueError("'family' must not be empty")
    if budget is None:
        budget = DEFAULTS.subset_budget
    total = math.comb(family.n, k)
    if total > budget:
        raise BudgetExceededError(f'C({family.n}, {k}) = {total} subsets '
                                  f'exceed the budget of {budget}')
    chunk_size = chunk_size_for(len(family), k)
    logger.debug('scanning %d subsets in chunks of %d with %d job(s)',
                 total, chunk_size, jobs)
    if jobs == 1:
        chunks = subset_chunks(family.n, k, chunk_size)
        with tqdm(total=math.ceil(total / chunk_size),
                  disable=not progress,
                  desc=f'{k}-subsets',
                  ) as bar:
            best = _scan(family, chunks, bar=bar)
    else:
        firsts = range(1, family.n - k + 2)
        scan = partial(_scan_first, family, k, chunk_size)
        best = (math.inf, None)
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            results = executor.map(scan, firsts)
            for result in tqdm(results,
                               total=len(firsts),
                               disable=not progress,
                               desc=f'{k}-subsets',
                               ):
                best = min(best, result, key=_order)
    logger.info('minimum over C(%d, %d) subsets: %d at %s', family.n, k,
                best[0], best[1])
    return best


def _scan(family, chunks, *, bar=None) -> tuple:
    best_count = math.inf
    best_subset = None
    for chunk in chunks:
        counts = count_distinct(pattern_codes(family.keys(chunk)))
        index = int(np.argmin(counts))
        if counts[index] < best_count:
            best_count = int(counts[index])
            best_subset = tuple(int(element) for element in chunk[index])
        if bar is not None:
            bar.update(1)
        if best_count == 1:
            break
    return (best_count, best_subset)


def _scan_first(family, k, chunk_size, first) -> tuple:
    chunks = subset_chunks(family.n, k, chunk_size, first=first)
    return _scan(family, chunks)


def _order(result: tuple) -> tuple:
    count, subset = result
    return (count, () if subset is None else subset)
