import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Optional

import numpy as np
from tqdm import tqdm

from ...config import DEFAULTS
from ...core.PermFamily import PermFamily
from ...core._patterns import lehmer_codes
from ...exceptions import BudgetExceededError
from ...records.ExactResult import ExactResult
from ..inspections.min_shatter import min_shatter

logger = logging.getLogger(__name__)


def f_exact(n: int,
            k: int,
            t: int,
            *,
            cap: Optional[int] = None,
            symmetry: bool = True,
            jobs: int = 1,
            progress: bool = False,
            ) -> ExactResult:
    r"""Computes the least number of permutations of ``[n]`` that together
    induce at least ``t`` distinct patterns on every k-subset, by exhaustive
    branch and bound search.

    Family sizes are tried in increasing order starting from ``t``. For a
    given size the members are chosen in increasing lexicographic order of
    their rank tuples, and a partial family is dropped as soon as some
    k-subset could not reach ``t`` patterns even if every remaining member
    induced a new one on it. The first family found is therefore the
    lexicographically least of minimum size. It is re-verified with
    :func:`min_shatter` before being returned.

    Basic usage:
        >>> result = permshatter.f_exact(5, 4, 2)
        >>> result.value
        2
        >>> result.optimal_family[1].rank
        (1, 2, 5, 4, 3)

        >>> permshatter.f_exact(5, 4, 1).value
        1

    ``symmetry``:
        Relabelling the ground set maps a solution to a solution, so the
        first member can be fixed to the identity. ``symmetry=False`` turns
        the reduction off, which gives an independent cross-check:

        >>> (permshatter.f_exact(4, 3, 4).value
        ...  == permshatter.f_exact(4, 3, 4, symmetry=False).value)
        True

    ``jobs``:
        Distributes the branches of the second member over worker processes.
        The result does not depend on ``jobs``.

    .. error::

        The search grows like ``(n!)**(m - 1)``; ``n`` is capped by ``cap``
        (default ``PERMSHATTER_EXACT_CAP``):

        >>> permshatter.f_exact(9, 3, 2)
        BudgetExceededError: n = 9 exceeds the exact search cap of 7

        >>> permshatter.f_exact(5, 3, 7)
        ValueError: 't' must lie between 1 and 3! = 6
    """
    for name, value in (('n', n), ('k', k), ('t', t)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"'{name}' must be 'int'")
    if not isinstance(symmetry, bool):
        raise TypeError("'symmetry' must be 'bool'")
    if not isinstance(progress, bool):
        raise TypeError("'progress' must be 'bool'")
    if not isinstance(jobs, int) or jobs < 1:
        raise ValueError("'jobs' must be a positive 'int'")
    if n < 1:
        raise ValueError("'n' must be a positive 'int'")
    if cap is None:
        cap = DEFAULTS.exact_cap
    if n > cap:
        raise BudgetExceededError(f'n = {n} exceeds the exact search cap of '
                                  f'{cap}')
    if not 1 <= k <= n:
        raise ValueError(f"'k' must lie between 1 and {n}")
    if not 1 <= t <= math.factorial(k):
        raise ValueError(f"'t' must lie between 1 and {k}! = "
                         f"{math.factorial(k)}")
    ranks = np.array(list(itertools.permutations(range(1, n + 1))),
                     dtype=np.int64)
    subsets = np.array(list(itertools.combinations(range(n), k)),
                       dtype=np.int64)
    codes = lehmer_codes(ranks[:, subsets])
    nodes = 0
    size = t
    while True:
        chosen, visited = _solve(codes, t, size, math.factorial(k),
                                 symmetry=symmetry, jobs=jobs,
                                 progress=progress)
        nodes += visited
        logger.debug('size %d: %d nodes, %s', size, visited,
                     'found' if chosen is not None else 'exhausted')
        if chosen is not None:
            break
        size += 1
    family = PermFamily.from_rank_matrix(ranks[list(chosen)])
    minimum, witness = min_shatter(family, k)
    if minimum < t:
        raise RuntimeError(f'search returned a family inducing only '
                           f'{minimum} patterns on {witness}')
    note = (f'iterative deepening over family sizes {t}..{size} among the '
            f'{len(ranks)} permutations of [{n}] in lexicographic order, '
            f'{nodes} nodes')
    if symmetry:
        note += ', first member fixed to the identity'
    logger.info('f_%d(%d, %d) = %d (%d nodes)', k, n, t, size, nodes)
    return ExactResult(n=n,
                       k=k,
                       t=t,
                       value=size,
                       optimal_family=family,
                       note=note,
                       nodes=nodes,
                       symmetry_reduced=symmetry,
                       )


def _solve(codes: np.ndarray,
           t: int,
           size: int,
           patterns: int,
           *,
           symmetry: bool,
           jobs: int,
           progress: bool,
           ) -> tuple:
    subsets = codes.shape[1]
    seen = np.zeros((subsets, patterns), dtype=bool)
    counts = np.zeros(subsets, dtype=np.int64)
    prefix = ()
    # the identity row is codes[0]
    if symmetry:
        seen[np.arange(subsets), codes[0]] = True
        counts += 1
        prefix = (0, )
    if len(prefix) == size:
        return (prefix if counts.min() >= t else None), 1
    branches = _children(codes, t, size - len(prefix), seen, counts,
                         len(prefix) and prefix[-1] + 1)
    visited = 1
    if jobs == 1 or size - len(prefix) == 1:
        for member, child_counts in tqdm(branches,
                                         disable=not progress,
                                         desc=f'size {size}',
                                         ):
            result, nodes = _descend(codes, t, size, prefix, seen, counts,
                                     member, child_counts)
            visited += nodes
            if result is not None:
                return result, visited
        return None, visited
    branch = partial(_branch, codes, t, size, prefix, seen, counts)
    # map keeps branch order: the first hit is the lex-least family
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        results = executor.map(branch, [member for member, _ in branches])
        found = None
        for result, nodes in tqdm(results,
                                  total=len(branches),
                                  disable=not progress,
                                  desc=f'size {size}',
                                  ):
            visited += nodes
            if found is None and result is not None:
                found = result
    return found, visited


def _branch(codes, t, size, prefix, seen, counts, member) -> tuple:
    child_counts = counts + ~seen[np.arange(len(counts)), codes[member]]
    return _descend(codes, t, size, prefix, seen, counts, member,
                    child_counts)


def _descend(codes: np.ndarray,
             t: int,
             size: int,
             prefix: tuple,
             seen: np.ndarray,
             counts: np.ndarray,
             member: int,
             child_counts: np.ndarray,
             ) -> tuple:
    prefix = prefix + (member, )
    remaining = size - len(prefix)
    if remaining == 0:
        return (prefix if child_counts.min() >= t else None), 1
    child_seen = seen.copy()
    child_seen[np.arange(len(counts)), codes[member]] = True
    visited = 1
    for grandchild, grand_counts in _children(codes, t, remaining,
                                              child_seen, child_counts,
                                              member + 1):
        result, nodes = _descend(codes, t, size, prefix, child_seen,
                                 child_counts, grandchild, grand_counts)
        visited += nodes
        if result is not None:
            return result, visited
    return None, visited


def _children(codes: np.ndarray,
              t: int,
              remaining: int,
              seen: np.ndarray,
              counts: np.ndarray,
              start: int,
              ) -> list:
    r"""Candidate next members from ``start`` on that keep every subset
    within reach of ``t``, with the counts they lead to.
    """
    stop = len(codes) - remaining + 1
    if start >= stop:
        return []
    rows = codes[start:stop]
    gains = ~seen[np.arange(len(counts)), rows]
    child_counts = counts + gains
    # each remaining member adds at most one pattern per subset
    feasible = np.flatnonzero(
        (child_counts + remaining - 1 >= t).all(axis=1)
    )
    return [(start + int(index), child_counts[index]) for index in feasible]
