from typing import Union

import numpy as np

from ...core._FamilyParent import _FamilyParent
from ...core._patterns import pattern_codes, validate_subset


def count_induced(family: _FamilyParent,
                  subset: Union[list, tuple, set],
                  ) -> int:
    r"""Returns the number of distinct patterns the members of a family
    induce on a subset.

    Basic usage:
        >>> family = permshatter.monotone_family(10, 2)
        >>> permshatter.count_induced(family, [2, 5, 9])
        2

        Works on any family, explicit or implicit:

        >>> family = permshatter.PermFamily.from_orders(
        ...     [(1, 2, 3, 4), (4, 3, 2, 1), (2, 1, 4, 3)]
        ... )
        >>> permshatter.count_induced(family, [1, 2, 3, 4])
        3

    .. error::

        An empty family induces no pattern at all:

        >>> permshatter.count_induced(permshatter.PermFamily([], n=4), [1])
        ValueError: 'family' must not be empty
    """
    if not isinstance(family, _FamilyParent):
        raise TypeError("'family' must be 'PermFamily' or 'CubeFamily'")
    subset = validate_subset(subset, family.n)
    if len(family) == 0:
        raise ValueError("'family' must not be empty")
    keys = family.keys(np.array([subset], dtype=np.int64))
    return len(np.unique(pattern_codes(keys)[:, 0]))
