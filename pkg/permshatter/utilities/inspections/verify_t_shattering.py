import logging
import math
from typing import Optional

import numpy as np
from tqdm import tqdm

from ...config import DEFAULTS
from ...core._FamilyParent import _FamilyParent
from ...core._patterns import (
    chunk_size_for,
    count_distinct,
    pattern_codes,
    sample_subsets,
)
from ...records.ShatterCertificate import ShatterCertificate
from .min_shatter import min_shatter

logger = logging.getLogger(__name__)


def verify_t_shattering(family: _FamilyParent,
                        k: int,
                        t: int,
                        *,
                        mode: str = 'exhaustive',
                        samples: Optional[int] = None,
                        seed: Optional[int] = None,
                        budget: Optional[int] = None,
                        jobs: int = 1,
                        progress: bool = False,
                        ) -> ShatterCertificate:
    r"""Checks whether a family induces at least ``t`` patterns on every
    k-subset of its ground set, and returns a :class:`ShatterCertificate`.

    Basic usage:
        >>> family = permshatter.monotone_family(8, 2)
        >>> certificate = permshatter.verify_t_shattering(family, 4, 2)
        >>> certificate.passed
        True
        >>> family = permshatter.monotone_family(8, 1)
        >>> certificate = permshatter.verify_t_shattering(family, 3, 2)
        >>> certificate.passed, certificate.min_count
        (False, 1)

    ``mode='sampled'``:
        Draws ``samples`` uniform k-subsets from a generator seeded with
        ``seed``; both are required. The witness is the lexicographically
        least subset attaining the minimum among the samples.

        >>> family = permshatter.monotone_family(10 ** 6, 2)
        >>> certificate = permshatter.verify_t_shattering(
        ...     family, 4, 2, mode='sampled', samples=1000, seed=3,
        ... )
        >>> certificate.mode, certificate.passed
        ('sampled', True)

    .. error::

        In exhaustive mode the subset budget of :func:`min_shatter` applies
        and :exc:`BudgetExceededError` propagates.
    """
    if not isinstance(family, _FamilyParent):
        raise TypeError("'family' must be 'PermFamily' or 'CubeFamily'")
    for name, value in (('k', k), ('t', t)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"'{name}' must be 'int'")
    if not 1 <= k <= family.n:
        raise ValueError(f"'k' must lie between 1 and {family.n}")
    if t < 1:
        raise ValueError("'t' must be a positive 'int'")
    if len(family) == 0:
        raise ValueError("'family' must not be empty")
    if mode == 'exhaustive':
        min_count, witness = min_shatter(family,
                                         k,
                                         budget=budget,
                                         jobs=jobs,
                                         progress=progress,
                                         )
        certificate = ShatterCertificate(k=k,
                                         t=t,
                                         mode='exhaustive',
                                         min_count=min_count,
                                         witness=witness,
                                         n=family.n,
                                         family_size=len(family),
                                         )
    elif mode == 'sampled':
        if not isinstance(samples, int) or samples < 1:
            raise ValueError("sampled mode needs a positive 'samples'")
        if not isinstance(seed, int):
            raise ValueError("sampled mode needs an 'int' seed")
        min_count, witness = _sampled_minimum(family, k, samples, seed,
                                              progress=progress)
        certificate = ShatterCertificate(k=k,
                                         t=t,
                                         mode='sampled',
                                         min_count=min_count,
                                         witness=witness,
                                         samples=samples,
                                         seed=seed,
                                         n=family.n,
                                         family_size=len(family),
                                         )
    else:
        raise ValueError("'mode' must be 'exhaustive' or 'sampled'")
    logger.info('%s verification of %d-subsets against t=%d: min %d (%s)',
                mode, k, t, certificate.min_count,
                'passed' if certificate.passed else 'failed')
    return certificate


def _sampled_minimum(family, k, samples, seed, *, progress) -> tuple:
    rng = np.random.default_rng(seed)
    chunk_size = chunk_size_for(len(family), k)
    best_count = math.inf
    best_subsets = []
    drawn = 0
    with tqdm(total=samples, disable=not progress, desc='samples') as bar:
        while drawn < samples:
            size = min(chunk_size, samples - drawn)
            chunk = sample_subsets(rng, family.n, k, size)
            counts = count_distinct(pattern_codes(family.keys(chunk)))
            minimum = int(counts.min())
            rows = [tuple(int(element) for element in chunk[index])
                    for index in np.flatnonzero(counts == minimum)]
            if minimum < best_count:
                best_count, best_subsets = minimum, rows
            elif minimum == best_count:
                best_subsets.extend(rows)
            drawn += size
            bar.update(size)
    return best_count, min(best_subsets)
