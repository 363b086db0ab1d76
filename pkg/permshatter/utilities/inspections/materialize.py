from typing import Optional, Union

from ...core.LexPermutation import LexPermutation
from ...core.Permutation import Permutation
from ...core.PiPermutation import PiPermutation


def materialize(order: Union[LexPermutation, PiPermutation],
                points: Optional[list] = None,
                ) -> Permutation:
    r"""Turns an order of ``[b]^d`` into an explicit :class:`Permutation` of a
    list of distinct points: element ``j`` of the result stands for
    ``points[j - 1]``. Without ``points``, the whole cube is used, listed in
    standard lex order.

    Basic usage:
        >>> rho = permshatter.LexPermutation.reversal(2, 2)
        >>> permshatter.materialize(rho).order
        (4, 3, 2, 1)

        >>> rho = permshatter.LexPermutation.identity(3, 2)
        >>> permshatter.materialize(rho, [(3, 1), (1, 2), (2, 2)]).rank
        (3, 1, 2)

    .. error::

        >>> permshatter.materialize(rho, [(1, 1), (1, 1)])
        ValueError: 'points' must not contain duplicates
    """
    if not isinstance(order, (LexPermutation, PiPermutation)):
        raise TypeError("'order' must be 'LexPermutation' or "
                        "'PiPermutation'")
    return order.materialize(points)
