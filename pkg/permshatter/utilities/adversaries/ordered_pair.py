import logging
from typing import Union

import numpy as np

from ...core._FamilyParent import _FamilyParent
from ...core._patterns import validate_subset
from ...exceptions import InsufficientGroundSetError
from ...trees.OrderedPair import OrderedPair

logger = logging.getLogger(__name__)


def ordered_pair(family: _FamilyParent,
                 ground: Union[list, tuple, set, range],
                 *,
                 best_effort: bool = False,
                 ) -> OrderedPair:
    r"""Extracts from a set ``X`` two disjoint sets ``A`` and ``B`` of equal
    size such that every member of the family puts all of ``A`` before all
    of ``B`` or the other way round, with both sides of size at least
    ``|X| // 2**(m + 1)`` for a family of ``m`` members.

    It starts from the first and second ``|X| // 2`` elements of ``X`` in
    natural order. For each member in turn, it takes the upper half ``L`` of
    the current ``A`` and ``B`` under that member and keeps ``L`` on the side
    ``L`` meets most (``A`` on ties), dropping ``L`` from the other side.

    Basic usage:
        >>> family = permshatter.PermFamily([], n=8)
        >>> pair = permshatter.ordered_pair(family, range(1, 9))
        >>> pair.A, pair.B
        ((1, 2, 3, 4), (5, 6, 7, 8))

        >>> family = permshatter.PermFamily.random(16, 2, seed=4)
        >>> permshatter.ordered_pair(family, range(1, 17)).min_size >= 2
        True

    .. error::

        With fewer than ``2**(m + 1)`` elements the size guarantee is void:

        >>> family = permshatter.monotone_family(8, 2)
        >>> permshatter.ordered_pair(family, [1, 2, 3, 4, 5])
        InsufficientGroundSetError: |X| = 5 is below 2**(m + 1) = 8

        ``best_effort=True`` runs the halving anyway; a set with fewer than
        two elements always fails.
    """
    if not isinstance(family, _FamilyParent):
        raise TypeError("'family' must be 'PermFamily' or 'CubeFamily'")
    if not isinstance(best_effort, bool):
        raise TypeError("'best_effort' must be 'bool'")
    ground = validate_subset(ground, family.n)
    m = len(family)
    if len(ground) < 2:
        raise InsufficientGroundSetError('an ordered pair needs |X| >= 2')
    if len(ground) < 2 ** (m + 1) and not best_effort:
        raise InsufficientGroundSetError(f'|X| = {len(ground)} is below '
                                         f'2**(m + 1) = {2 ** (m + 1)}')
    half = len(ground) // 2
    elements = np.array(ground[:2 * half], dtype=np.int64)
    keys = family.keys(elements[None, :])[:, 0, :]
    in_a = np.zeros(2 * half, dtype=bool)
    in_a[:half] = True
    in_b = ~in_a
    for j in range(m):
        alive = np.flatnonzero(in_a | in_b)
        ell = len(alive) // 2
        if ell == 0:
            break
        order = alive[np.argsort(keys[j, alive], kind='stable')]
        top = np.zeros(2 * half, dtype=bool)
        top[order[len(order) - ell:]] = True
        meets_a = np.count_nonzero(top & in_a)
        if meets_a >= ell - meets_a:
            in_a &= top
            in_b &= ~top
        else:
            in_b &= top
            in_a &= ~top
    pair = OrderedPair(family, elements[in_a], elements[in_b])
    logger.debug('ordered pair of |X|=%d with m=%d: sides of %d', len(ground),
                 m, pair.min_size)
    return pair
