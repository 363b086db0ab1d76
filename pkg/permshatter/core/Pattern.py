from typing import Union

import numpy as np


class Pattern():
    r"""The order a permutation induces on a subset, in canonical form:
    ``ranks[j]`` is the position of the ``j``-th smallest subset element
    (in natural order) within the induced order.

    Basic usage:
        >>> pattern = permshatter.Pattern((2, 1, 3))
        >>> pattern.s
        3
        >>> pattern.ranks
        (2, 1, 3)

        Patterns are hashable, so the number of distinct patterns of a
        family on a subset is the size of a set:

        >>> len({permshatter.Pattern((1, 2)), permshatter.Pattern((1, 2))})
        1

    :meth:`from_keys`:
        Builds the pattern of a row of sort keys:

        >>> permshatter.Pattern.from_keys([30, 10, 20]).ranks
        (3, 1, 2)
    """

    ### CLASS VARIABLES ###

    __slots__ = ('_ranks', )

    ### INITIALISER ###

    def __init__(self, ranks: Union[list, tuple]) -> None:
        r'Initialises self.'
        if not isinstance(ranks, (list, tuple)):
            raise TypeError("'ranks' must be 'list' or 'tuple'")
        if not all(isinstance(rank, (int, np.integer)) for rank in ranks):
            raise TypeError("'ranks' must contain only 'int'")
        ranks = tuple(int(rank) for rank in ranks)
        if sorted(ranks) != list(range(1, len(ranks) + 1)):
            raise ValueError("'ranks' must be a permutation of "
                             f"1..{len(ranks)}")
        self._ranks = ranks

    ### SPECIAL METHODS ###

    def __repr__(self) -> str:
        r'Returns interpreter representation of :attr:`ranks`.'
        return f'{type(self).__name__}({self._ranks})'

    def __len__(self) -> int:
        return len(self._ranks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Pattern):
            return NotImplemented
        return self._ranks == other._ranks

    def __hash__(self) -> int:
        return hash(self._ranks)

    ### PUBLIC METHODS ###

    @classmethod
    def from_keys(cls, keys) -> 'Pattern':
        r'Pattern induced by a sequence of distinct sort keys.'
        keys = np.asarray(keys)
        if keys.ndim != 1:
            raise ValueError("'keys' must be one-dimensional")
        ranks = 1 + np.count_nonzero(keys[None, :] < keys[:, None], axis=1)
        return cls(tuple(int(rank) for rank in ranks))

    ### PUBLIC PROPERTIES ###

    @property
    def s(self) -> int:
        r'Size of the subset the pattern lives on.'
        return len(self._ranks)

    @property
    def ranks(self) -> tuple:
        r'Positions of the subset elements, smallest element first.'
        return self._ranks
