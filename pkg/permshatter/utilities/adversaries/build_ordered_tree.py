import logging
from typing import Union

from ...core._FamilyParent import _FamilyParent
from ...core._patterns import validate_subset
from ...exceptions import InsufficientGroundSetError, PreconditionError
from ...trees.ColoredTree import ColoredTree
from ...trees.OrderedPair import OrderedPair
from .ordered_pair import ordered_pair

logger = logging.getLogger(__name__)


def build_ordered_tree(family: _FamilyParent,
                       ground: Union[list, tuple, set, range],
                       height: int,
                       *,
                       best_effort: bool = False,
                       ) -> ColoredTree:
    r"""Builds the complete binary tree of a given height whose root carries
    the set ``X0`` and where every vertex ``v`` splits its fragment ``X_v``
    into an ordered pair ``(A_v, B_v)``; the children of ``v`` get ``A_v``
    and ``B_v``. The colour of ``v`` is the direction bit string of its pair.

    Basic usage:
        >>> family = permshatter.PermFamily.random(256, 1, seed=3)
        >>> tree = permshatter.build_ordered_tree(family, range(1, 257), 4)
        >>> tree.vertex_count
        31
        >>> min(len(tree.fragment(v)) for v in tree.layer(4)) >= 1
        True
        >>> tree.distinct_colors <= {'0', '1'}
        True

    .. note::

        Leaves whose fragment has a single element carry an empty pair,
        coloured as if ``A`` came first for every member.

    .. error::

        Nonempty leaf fragments are guaranteed once
        ``|X0| >= 2**(height * (m + 1))``; below that, ``best_effort=True`` is
        required:

        >>> permshatter.build_ordered_tree(family, range(1, 101), 4)
        PreconditionError: |X0| = 100 is below 2**(height * (m + 1)) = 256
    """
    if not isinstance(family, _FamilyParent):
        raise TypeError("'family' must be 'PermFamily' or 'CubeFamily'")
    if not isinstance(height, int) or isinstance(height, bool):
        raise TypeError("'height' must be 'int'")
    if not isinstance(best_effort, bool):
        raise TypeError("'best_effort' must be 'bool'")
    if height < 0:
        raise ValueError("'height' must be a nonnegative 'int'")
    ground = validate_subset(ground, family.n)
    m = len(family)
    threshold = 2 ** (height * (m + 1))
    if len(ground) < threshold and not best_effort:
        raise PreconditionError(f'|X0| = {len(ground)} is below '
                                f'2**(height * (m + 1)) = {threshold}')
    count = 2 ** (height + 1) - 1
    fragments = [None] * (count + 1)
    pairs = [None] * (count + 1)
    fragments[1] = ground
    for vertex in range(1, count + 1):
        fragment = fragments[vertex]
        internal = vertex < 2 ** height
        if len(fragment) < 2:
            if internal:
                raise InsufficientGroundSetError(
                    f'vertex {vertex} has a fragment of size {len(fragment)} '
                    f'and cannot be split'
                )
            pairs[vertex] = OrderedPair(family, (), ())
            continue
        pair = ordered_pair(family, fragment, best_effort=True)
        pairs[vertex] = pair
        if internal:
            fragments[2 * vertex] = pair.A
            fragments[2 * vertex + 1] = pair.B
    tree = ColoredTree(height,
                       [pair.color for pair in pairs[1:]],
                       fragments=fragments[1:],
                       pairs=pairs[1:],
                       )
    logger.debug('ordered tree of height %d on %d elements: %d colours',
                 height, len(ground), len(tree.distinct_colors))
    return tree
