from typing import Union

import numpy as np

from ..core._FamilyParent import _FamilyParent


class OrderedPair():
    r"""Two disjoint element sets ``A`` and ``B`` such that every member of a
    family puts all of ``A`` before all of ``B`` or all of ``B`` before all of
    ``A``. The pair is checked against every member on construction.

    Basic usage:
        >>> family = permshatter.monotone_family(8, 2)
        >>> pair = permshatter.OrderedPair(family, [1, 2], [7, 8])
        >>> pair.direction
        (1, 0)

        ``direction[j]`` is ``1`` when member ``j`` puts ``A`` first. The
        colour packs the direction bits into a string:

        >>> pair.color
        '10'

    .. error::

        >>> permshatter.OrderedPair(family, [1, 5], [3])
        ValueError: pair is not ordered by member 0

    .. note::

        A pair with an empty side is ordered by every member, with direction
        ``1`` throughout.
    """

    ### CLASS VARIABLES ###

    __slots__ = ('_a',
                 '_b',
                 '_direction',
                 )

    ### INITIALISER ###

    def __init__(self,
                 family: _FamilyParent,
                 a: Union[list, tuple, np.ndarray],
                 b: Union[list, tuple, np.ndarray],
                 ) -> None:
        r'Initialises self.'
        if not isinstance(family, _FamilyParent):
            raise TypeError("'family' must be 'PermFamily' or 'CubeFamily'")
        a = tuple(sorted(int(element) for element in a))
        b = tuple(sorted(int(element) for element in b))
        if len(set(a)) != len(a) or len(set(b)) != len(b):
            raise ValueError('pair sides must not contain duplicates')
        if set(a) & set(b):
            raise ValueError('pair sides must be disjoint')
        if any(not 1 <= element <= family.n for element in a + b):
            raise ValueError(f'pair elements must lie between 1 and '
                             f'{family.n}')
        self._a = a
        self._b = b
        self._direction = _directions(family, a, b)

    ### SPECIAL METHODS ###

    def __repr__(self) -> str:
        return f'{type(self).__name__}(A={self._a}, B={self._b})'

    ### PUBLIC PROPERTIES ###

    @property
    def A(self) -> tuple:
        r'First side, sorted.'
        return self._a

    @property
    def B(self) -> tuple:
        r'Second side, sorted.'
        return self._b

    @property
    def direction(self) -> tuple:
        r'Per member: ``1`` if ``A`` comes first, else ``0``.'
        return self._direction

    @property
    def color(self) -> str:
        r'The direction bits as a string, member 0 first.'
        return ''.join(str(bit) for bit in self._direction)

    @property
    def min_size(self) -> int:
        r'Size of the smaller side.'
        return min(len(self._a), len(self._b))


def _directions(family: _FamilyParent, a: tuple, b: tuple) -> tuple:
    if len(a) == 0 or len(b) == 0:
        return (1, ) * len(family)
    keys = family.keys(np.array([a + b], dtype=np.int64))[:, 0, :]
    keys_a = keys[:, :len(a)]
    keys_b = keys[:, len(a):]
    a_first = keys_a.max(axis=1) < keys_b.min(axis=1)
    b_first = keys_b.max(axis=1) < keys_a.min(axis=1)
    unordered = np.flatnonzero(~(a_first | b_first))
    if unordered.size > 0:
        raise ValueError(f'pair is not ordered by member {unordered[0]}')
    return tuple(int(bit) for bit in a_first)
