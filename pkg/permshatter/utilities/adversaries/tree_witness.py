import logging

from ...core._FamilyParent import _FamilyParent
from ...core._patterns import ceil_log2
from ...exceptions import PreconditionError
from ...records.Witness import Witness
from ..inspections.count_induced import count_induced
from .build_ordered_tree import build_ordered_tree
from .g_upper import g_upper
from .mono_subdivision import mono_subdivision

logger = logging.getLogger(__name__)


def tree_witness(family: _FamilyParent,
                 k: int,
                 *,
                 best_effort: bool = False,
                 ) -> Witness:
    r"""Extracts a k-subset on which a family of ``m`` permutations induces
    at most ``2**h`` patterns, ``h = ceil(log2(k))``, provided
    ``n >= 2**(H * (m + 1))`` with ``H = g_upper(2**m, h)``.

    It builds the ordered tree of height ``H`` on ``[n]`` with
    :func:`build_ordered_tree`, finds a subdivision of height ``h`` with
    monochromatic internal layers with :func:`mono_subdivision`, and picks
    the least element of the fragment of every leaf image. Two picks are
    ordered by the colour of the layer where their branches split, so the
    ``2**h`` picks carry at most ``2**h`` patterns; the ``k`` least picks
    are returned.

    Basic usage:
        >>> family = permshatter.PermFamily.random(256, 1, seed=5)
        >>> witness = permshatter.tree_witness(family, 4)
        >>> witness.guaranteed_bound, witness.valid_precondition
        (4, True)
        >>> witness.achieved_count <= 4
        True
        >>> witness.subdivision.height
        2

        The identity alone induces one pattern on anything:

        >>> family = permshatter.monotone_family(256, 1)
        >>> permshatter.tree_witness(family, 4).achieved_count
        1

    .. error::

        >>> family = permshatter.monotone_family(256, 2)
        >>> permshatter.tree_witness(family, 4)
        PreconditionError: n = 256 is below 2**(H * (m + 1)) = 262144

        ``best_effort=True`` lowers the tree to the height ``[n]`` can fill
        and reports ``valid_precondition=False``; it still fails when no
        subdivision exists at that height.
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
    h = ceil_log2(k)
    height = g_upper(2 ** m, h)
    threshold = 2 ** (height * (m + 1))
    valid = family.n >= threshold
    if not valid:
        if not best_effort:
            raise PreconditionError(f'n = {family.n} is below '
                                    f'2**(H * (m + 1)) = {threshold}')
        height = min(height, family.n.bit_length() - 1)
        logger.info('tree height lowered to %d for n=%d', height, family.n)
    tree = build_ordered_tree(family, range(1, family.n + 1), height,
                              best_effort=best_effort)
    subdivision = mono_subdivision(tree, h, best_effort=best_effort)
    if subdivision is None:
        raise PreconditionError(f'no subdivision of height {h} found in the '
                                f'ordered tree of height {height}')
    picks = sorted(tree.fragment(leaf)[0] for leaf in subdivision.leaves)
    subset = tuple(picks[:k])
    achieved = count_induced(family, subset)
    logger.info('tree witness %s for k=%d, m=%d: %d patterns (bound %d)',
                subset, k, m, achieved, 2 ** h)
    return Witness(k=k,
                   subset=subset,
                   guaranteed_bound=2 ** h,
                   achieved_count=achieved,
                   method='tree',
                   valid_precondition=valid,
                   tree=tree,
                   subdivision=subdivision,
                   )
