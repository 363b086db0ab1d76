import logging
from typing import Optional

from ...core._patterns import ceil_log2
from ...exceptions import PreconditionError
from ...trees.ColoredTree import ColoredTree
from ...trees.Subdivision import Subdivision
from .check_subdivision import check_subdivision
from .g_upper import g_upper, search_height

logger = logging.getLogger(__name__)


def mono_subdivision(tree: ColoredTree,
                     h: int,
                     *,
                     best_effort: bool = False,
                     ) -> Optional[Subdivision]:
    r"""Finds a subdivision of the complete binary tree of height ``h`` in a
    coloured tree such that the images on every internal layer share one
    colour.

    The search is recursive. Below a vertex ``v`` it looks at the vertices
    ``u`` of the layer ``d' = ceil(log2(c**(h - 1) + 1))`` levels down, finds
    a subdivision of height ``h - 1`` below each of them and, since there are
    more such ``u`` than colourings of ``h - 1`` internal layers, meets two
    with the same layer colours. Joining both at their lowest common
    ancestor gives the subdivision of height ``h``. Here ``c`` is the number
    of colours present in the tree.

    Basic usage:
        >>> tree = permshatter.ColoredTree(
        ...     4, ['0', '1', '0', '1', '0', '1', '0'] + ['1'] * 24,
        ... )
        >>> subdivision = permshatter.mono_subdivision(tree, 2)
        >>> subdivision.images
        (1, 4, 6, 8, 9, 12, 13)
        >>> subdivision.layer_colors
        ('0', '1')

        Every returned subdivision is re-checked with
        :func:`check_subdivision`.

    .. error::

        The search is only guaranteed to succeed when the tree height is at
        least :func:`g_upper` of the colour count and ``h``:

        >>> tree = permshatter.ColoredTree(2, ['0', '1', '0', '1', '1', '0',
        ...                                    '0'])
        >>> permshatter.mono_subdivision(tree, 2)
        PreconditionError: tree height 2 is below g_upper(2, 2) = 4

        With ``best_effort=True`` the search runs anyway and returns ``None``
        when it finds nothing.
    """
    if not isinstance(tree, ColoredTree):
        raise TypeError("'tree' must be 'ColoredTree'")
    if not isinstance(h, int) or isinstance(h, bool):
        raise TypeError("'h' must be 'int'")
    if not isinstance(best_effort, bool):
        raise TypeError("'best_effort' must be 'bool'")
    if h < 0:
        raise ValueError("'h' must be a nonnegative 'int'")
    c = len(tree.distinct_colors)
    required = g_upper(c, h)
    if tree.height < required and not best_effort:
        raise PreconditionError(f'tree height {tree.height} is below '
                                f'g_upper({c}, {h}) = {required}')
    layers = _find(tree, 1, h, c)
    if layers is None:
        logger.info('no subdivision of height %d found in a tree of height '
                    '%d with %d colours', h, tree.height, c)
        return None
    images = [vertex for layer in layers for vertex in layer]
    subdivision = Subdivision(tree, images)
    if not check_subdivision(tree, subdivision):
        raise RuntimeError('subdivision search returned an invalid embedding')
    logger.debug('subdivision of height %d found in a tree of height %d',
                 h, tree.height)
    return subdivision


def _find(tree: ColoredTree, vertex: int, h: int, c: int) -> Optional[list]:
    if h == 0:
        return [[vertex]]
    available = tree.height - tree.depth(vertex)
    step = ceil_log2(c ** (h - 1) + 1)
    step = min(step, available - search_height(c, h - 1))
    if step < 1:
        return None
    seen = {}
    for candidate in range(vertex << step, (vertex + 1) << step):
        below = _find(tree, candidate, h - 1, c)
        if below is None:
            continue
        # colours of the internal layers below the candidate
        signature = tuple(tree.color(layer[0]) for layer in below[:h - 1])
        if signature not in seen:
            seen[signature] = (candidate, below)
            continue
        first, first_below = seen[signature]
        # equal colour sequences merge under the common ancestor
        root = tree.lowest_common_ancestor(first, candidate)
        return [[root]] + [left + right
                           for left, right in zip(first_below, below)]
    return None
