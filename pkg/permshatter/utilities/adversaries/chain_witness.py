import logging

from ...core._FamilyParent import _FamilyParent
from ...exceptions import InsufficientGroundSetError, PreconditionError
from ...records.Witness import Witness
from ..inspections.count_induced import count_induced
from .ordered_pair import ordered_pair

logger = logging.getLogger(__name__)


def chain_witness(family: _FamilyParent,
                  k: int,
                  *,
                  best_effort: bool = False,
                  ) -> Witness:
    r"""Extracts a k-subset on which a family of ``m`` permutations induces
    at most ``2**(k - 1)`` patterns, provided ``n >= 2**(k * (m + 1))``.

    Starting from ``A_0 = [n]``, it takes an ordered pair ``(A_i, B_i)`` of
    ``A_{i - 1}`` with :func:`ordered_pair` and picks ``x_i = min(B_i)``, for
    ``i = 1, ..., k``. Every member then orders ``x_i`` against all later
    picks the same way, so a pattern on ``{x_1, ..., x_k}`` is fixed by
    ``k - 1`` direction bits.

    Basic usage:
        >>> family = permshatter.PermFamily.random(4096, 2, seed=1)
        >>> witness = permshatter.chain_witness(family, 4)
        >>> witness.guaranteed_bound, witness.valid_precondition
        (8, True)
        >>> witness.achieved_count <= 8
        True

    .. note::

        Below the threshold ``best_effort=True`` still runs the extraction;
        the returned witness has ``valid_precondition`` set to ``False`` and
        its count carries no guarantee:

        >>> family = permshatter.monotone_family(64, 2)
        >>> witness = permshatter.chain_witness(family, 3, best_effort=True)
        >>> witness.subset, witness.valid_precondition
        ((9, 17, 33), False)

    .. error::

        >>> permshatter.chain_witness(family, 3)
        PreconditionError: n = 64 is below 2**(k * (m + 1)) = 512
    """
    if not isinstance(family, _FamilyParent):
        raise TypeError("'family' must be 'PermFamily' or 'CubeFamily'")
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError("'k' must be 'int'")
    if not isinstance(best_effort, bool):
        raise TypeError("'best_effort' must be 'bool'")
    if not 1 <= k <= family.n:
        raise ValueError(f"'k' must lie between 1 and {family.n}")
    if len(family) == 0:
        raise ValueError("'family' must not be empty")
    m = len(family)
    threshold = 2 ** (k * (m + 1))
    valid = family.n >= threshold
    if not valid and not best_effort:
        raise PreconditionError(f'n = {family.n} is below '
                                f'2**(k * (m + 1)) = {threshold}')
    ground = range(1, family.n + 1)
    picks = []
    pairs = []
    for step in range(k):
        if len(ground) < 2:
            if len(ground) == 1 and step == k - 1:
                picks.append(ground[0])
                break
            raise InsufficientGroundSetError(
                f'the chain ran out of elements after {step} picks'
            )
        pair = ordered_pair(family, ground, best_effort=best_effort)
        if pair.min_size == 0:
            raise InsufficientGroundSetError(
                f'the chain ran out of elements after {step} picks'
            )
        pairs.append(pair)
        # one element of B, the chain continues inside A
        picks.append(pair.B[0])
        ground = pair.A
    subset = tuple(sorted(picks))
    achieved = count_induced(family, subset)
    logger.info('chain witness %s for k=%d, m=%d: %d patterns (bound %d)',
                subset, k, m, achieved, 2 ** (k - 1))
    return Witness(k=k,
                   subset=subset,
                   guaranteed_bound=2 ** (k - 1),
                   achieved_count=achieved,
                   method='chain',
                   valid_precondition=valid,
                   pairs=pairs,
                   )
