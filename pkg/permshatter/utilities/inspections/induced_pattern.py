from typing import Union

from ...core._patterns import validate_subset
from ...core.Pattern import Pattern
from ...core.Permutation import Permutation


def induced_pattern(perm: Permutation,
                    subset: Union[list, tuple, set],
                    ) -> Pattern:
    r"""Returns the :class:`Pattern` a permutation induces on a subset of its
    ground set.

    Basic usage:
        >>> perm = permshatter.Permutation.identity(10)
        >>> permshatter.induced_pattern(perm, [2, 5, 9])
        Pattern((1, 2, 3))

        Entry ``j`` of the pattern is the position of the ``j``-th smallest
        subset element in the induced order:

        >>> perm = permshatter.Permutation.from_order([4, 2, 5, 1, 3])
        >>> permshatter.induced_pattern(perm, [1, 2, 3])
        Pattern((2, 1, 3))

    .. error::

        Elements must be distinct and lie in the ground set:

        >>> permshatter.induced_pattern(perm, [1, 1, 2])
        ValueError: 'subset' must not contain duplicate elements
    """
    if not isinstance(perm, Permutation):
        raise TypeError("'perm' must be 'Permutation'")
    subset = validate_subset(subset, perm.n)
    return Pattern.from_keys([perm.rank[element - 1] for element in subset])
