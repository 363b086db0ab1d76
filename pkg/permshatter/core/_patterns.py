"""
Array helpers shared by the families and the oracles. All of them operate on
integer sort keys: an array whose last axis holds, for each element of a
subset, a key that orders the elements the way a family member does.
"""

import itertools
import math
from typing import Iterator, Optional

import numpy as np


def validate_subset(subset, n: int) -> tuple:
    r"""Returns ``subset`` as a sorted tuple of Python ints after checking
    that it is a nonempty set of distinct elements of ``[n]``.
    """
    if isinstance(subset, np.ndarray):
        subset = subset.tolist()
    if not isinstance(subset, (list, tuple, set, frozenset, range)):
        raise TypeError("'subset' must be 'list', 'tuple', 'set' or 'range'")
    elements = []
    for element in subset:
        if isinstance(element, (bool, np.bool_)) or not isinstance(
            element, (int, np.integer)
        ):
            raise TypeError("'subset' elements must be 'int'")
        elements.append(int(element))
    if len(elements) == 0:
        raise ValueError("'subset' must not be empty")
    if len(set(elements)) != len(elements):
        raise ValueError("'subset' must not contain duplicate elements")
    if min(elements) < 1 or max(elements) > n:
        raise ValueError(f"'subset' elements must lie between 1 and {n}")
    return tuple(sorted(elements))


def pattern_codes(keys: np.ndarray) -> np.ndarray:
    r"""Maps each row of sort keys (last axis) to an ``int64`` code such that
    two rows share a code if and only if they induce the same pattern.
    """
    keys = np.asarray(keys)
    s = keys.shape[-1]
    if s * (s - 1) // 2 <= 62:
        codes = np.zeros(keys.shape[:-1], dtype=np.int64)
        bit = 0
        for a in range(s):
            for b in range(a + 1, s):
                codes |= (keys[..., a] < keys[..., b]).astype(np.int64) << bit
                bit += 1
        return codes
    ranks = np.argsort(np.argsort(keys, axis=-1), axis=-1)
    flat = ranks.reshape(-1, s)
    _, inverse = np.unique(flat, axis=0, return_inverse=True)
    return inverse.reshape(keys.shape[:-1]).astype(np.int64)


def lehmer_codes(keys: np.ndarray) -> np.ndarray:
    r"""Maps each row of sort keys to the index of its pattern among all
    ``s!`` patterns, so that codes lie in ``range(math.factorial(s))``.
    """
    keys = np.asarray(keys)
    s = keys.shape[-1]
    codes = np.zeros(keys.shape[:-1], dtype=np.int64)
    for a in range(s):
        inversions = np.zeros(keys.shape[:-1], dtype=np.int64)
        for b in range(a + 1, s):
            inversions += keys[..., b] < keys[..., a]
        codes = codes * (s - a) + inversions
    return codes


def count_distinct(codes: np.ndarray) -> np.ndarray:
    r"""Number of distinct codes in every column of a ``(m, S)`` array."""
    codes = np.asarray(codes)
    if codes.shape[0] == 0:
        return np.zeros(codes.shape[1:], dtype=np.int64)
    ordered = np.sort(codes, axis=0)
    changes = np.count_nonzero(ordered[1:] != ordered[:-1], axis=0)
    return 1 + changes


def ranks_from_keys(keys: np.ndarray) -> np.ndarray:
    r'1-based ranks of the keys along the last axis.'
    return np.argsort(np.argsort(keys, axis=-1, kind='stable'),
                      axis=-1, kind='stable') + 1


def subset_chunks(n: int,
                  k: int,
                  chunk_size: int,
                  *,
                  first: Optional[int] = None,
                  ) -> Iterator[np.ndarray]:
    r"""Yields the k-subsets of ``[n]`` in lexicographic order as ``(S, k)``
    arrays of at most ``chunk_size`` rows. When ``first`` is given, only the
    subsets whose least element is ``first`` are produced.
    """
    if first is None:
        combinations = itertools.combinations(range(1, n + 1), k)
    else:
        combinations = (
            (first, ) + rest
            for rest in itertools.combinations(range(first + 1, n + 1), k - 1)
        )
    while True:
        block = list(itertools.islice(combinations, chunk_size))
        if not block:
            return
        yield np.array(block, dtype=np.int64).reshape(len(block), k)


def sample_subsets(rng: np.random.Generator,
                   n: int,
                   k: int,
                   count: int,
                   ) -> np.ndarray:
    r"""Draws ``count`` uniform k-subsets of ``[n]`` as sorted rows of a
    ``(count, k)`` array: the first ``k`` positions of random orderings of
    ``[n]`` while ``n * count`` is small, rejection of rows with repeated
    elements otherwise.
    """
    if n * count <= 10 ** 7:
        draws = np.argsort(rng.random((count, n)), axis=1)[:, :k] + 1
        draws.sort(axis=1)
        return draws.astype(np.int64)
    rows = []
    missing = count
    while missing > 0:
        draws = rng.integers(1, n + 1, size=(missing, k), dtype=np.int64)
        draws.sort(axis=1)
        if k > 1:
            distinct = np.all(draws[:, 1:] != draws[:, :-1], axis=1)
            draws = draws[distinct]
        rows.append(draws)
        missing -= draws.shape[0]
    return np.concatenate(rows)[:count]


def chunk_size_for(members: int, k: int) -> int:
    r'Number of subsets per chunk so that a key block stays near 2e6 ints.'
    return max(1, 2 * 10 ** 6 // max(1, members * k))


def ceil_log2(value: int) -> int:
    r'Smallest ``e`` with ``2 ** e >= value`` for a positive integer.'
    if value < 1:
        raise ValueError("'value' must be a positive 'int'")
    return (value - 1).bit_length()


def ceil_sqrt(value: int) -> int:
    r'Smallest ``r`` with ``r * r >= value`` for a nonnegative integer.'
    root = math.isqrt(value)
    return root if root * root == value else root + 1
