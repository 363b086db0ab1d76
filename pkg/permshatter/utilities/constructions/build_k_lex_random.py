import logging
import math
from typing import Optional

import numpy as np

from ...config import DEFAULTS
from ...core.CubeFamily import CubeFamily
from ...core.LexPermutation import LexPermutation
from ...exceptions import ConstructionError
from .verify_k_lex_shattering import (
    count_lex_constraints,
    verify_k_lex_shattering,
)

logger = logging.getLogger(__name__)


def build_k_lex_random(b: int,
                       d: int,
                       k: int,
                       seed: int = 0,
                       *,
                       weight: Optional[int] = None,
                       allow_sampling: bool = True,
                       budget: Optional[int] = None,
                       samples: Optional[int] = None,
                       max_retries: Optional[int] = None,
                       ) -> CubeFamily:
    r"""Builds a k-lex-shattering family of ``[b]^d`` out of uniformly random
    lex-permutations, verified by :func:`verify_k_lex_shattering`.

    The first batch has ``ceil(p * ln(C * p))`` members, where ``C`` is the
    number of constraint groups and ``p`` the largest number of combinations
    one group requires. While verification fails, batches of a quarter of
    that size are appended, up to ``max_retries`` times. All draws come from
    one generator seeded with ``seed``.

    Basic usage:
        >>> family = permshatter.build_k_lex_random(2, 8, 4, seed=3)
        >>> family.lex_report.passed
        True
        >>> family.lex_report.mode
        'exhaustive'

        A single member is enough when no constraint exists:

        >>> len(permshatter.build_k_lex_random(2, 1, 1))
        1

    ``allow_sampling``:
        When ``False``, the constraints must be checked exhaustively and
        :exc:`BudgetExceededError` is raised beyond the constraint budget.

    .. error::

        :exc:`ConstructionError` is raised when ``max_retries`` batches were
        appended without passing.
    """
    for name, value in (('b', b), ('d', d), ('k', k), ('seed', seed)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"'{name}' must be 'int'")
    if b < 2:
        raise ValueError("'b' must be at least 2")
    if d < 1 or k < 1:
        raise ValueError("'d' and 'k' must be positive 'int'")
    if not isinstance(allow_sampling, bool):
        raise TypeError("'allow_sampling' must be 'bool'")
    if max_retries is None:
        max_retries = DEFAULTS.max_retries
    groups, constraints, patterns = count_lex_constraints(b, d, k, weight)
    if groups == 0:
        first_batch = 1
    else:
        first_batch = max(1, math.ceil(patterns * math.log(groups * patterns)))
    batch = max(1, first_batch // 4)
    logger.info('building a %d-lex-shattering family of [%d]^%d: %d groups, '
                '%d constraints, first batch %d', k, b, d, groups,
                constraints, first_batch)
    rng = np.random.default_rng(seed)
    members = [LexPermutation.random(b, d, rng) for _ in range(first_batch)]
    mode = 'auto' if allow_sampling else 'exhaustive'
    for attempt in range(max_retries + 1):
        report = verify_k_lex_shattering(members,
                                         k,
                                         weight=weight,
                                         mode=mode,
                                         samples=samples,
                                         seed=seed,
                                         budget=budget,
                                         )
        if report.passed:
            logger.info('k-lex-shattering family found with %d members '
                        'after %d extra batch(es)', len(members), attempt)
            return CubeFamily(members, b=b, d=d, lex_report=report)
        logger.debug('attempt %d failed at %s; appending %d members',
                     attempt, report.violation, batch)
        # retries only ever append
        if attempt < max_retries:
            members.extend(LexPermutation.random(b, d, rng)
                           for _ in range(batch))
    raise ConstructionError(f'no {k}-lex-shattering family of [{b}]^{d} '
                            f'found with {len(members)} members')
