import json
from typing import Any, Union

import numpy as np


class _FamilyParent():
    r"""This is the parent class of all family classes. A family is an
    ordered list of total orders on ``[n]``; subclasses only need to
    implement :meth:`_keys`, which returns an integer sort key per member and
    element. Every oracle of the package talks to families through
    :meth:`keys`.
    """

    ### CLASS VARIABLES ###

    __slots__ = ('_n',
                 '_members',
                 )

    ### INITIALISER ###

    def __init__(self,
                 members: Union[list, tuple],
                 *,
                 n: int,
                 ) -> None:
        r'Initialises self.'
        if not isinstance(members, (list, tuple)):
            raise TypeError("'members' must be 'list' or 'tuple'")
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError("'n' must be 'int'")
        if n < 1:
            raise ValueError("'n' must be a positive 'int'")
        self._n = n
        self._members = tuple(members)

    ### SPECIAL METHODS ###

    def __repr__(self) -> str:
        r'Returns interpreter representation of the family.'
        return f'{type(self).__name__}(n={self._n}, size={len(self)})'

    def __len__(self) -> int:
        r'Returns the number of members, duplicates included.'
        return len(self._members)

    def __iter__(self):
        r'Iterates over the members.'
        return iter(self._members)

    def __getitem__(self, index):
        r'Returns a member, or a tuple of members for a slice.'
        return self._members[index]

    ### PUBLIC METHODS ###

    def keys(self, subsets: Union[list, tuple, np.ndarray]) -> np.ndarray:
        r"""Takes a ``(S, s)`` array of elements of ``[n]`` and returns an
        ``(m, S, s)`` array of sort keys: element ``subsets[q, j]`` precedes
        ``subsets[q, l]`` under member ``i`` if and only if
        ``keys[i, q, j] < keys[i, q, l]``.
        """
        subsets = np.asarray(subsets, dtype=np.int64)
        if subsets.ndim != 2:
            raise ValueError("'subsets' must be a two-dimensional array")
        if subsets.size > 0 and (subsets.min() < 1
                                 or subsets.max() > self._n):
            raise ValueError(f"'subsets' elements must lie between 1 and "
                             f"{self._n}")
        if len(self) == 0:
            return np.zeros((0, ) + subsets.shape, dtype=np.int64)
        return self._keys(subsets)

    def to_json(self) -> str:
        r'Dumps :meth:`to_dict` as a JSON string.'
        return json.dumps(self.to_dict())

    def write(self, path: str) -> None:
        r'Writes the family to a JSON file.'
        if not isinstance(path, str):
            raise TypeError("'path' must be 'str'")
        with open(path, 'w') as file:
            json.dump(self.to_dict(), file)

    @classmethod
    def read(cls, path: str) -> Any:
        r'Reads a family written by :meth:`write`.'
        if not isinstance(path, str):
            raise TypeError("'path' must be 'str'")
        with open(path) as file:
            return cls.from_dict(json.load(file))

    ### PRIVATE METHODS ###

    def _keys(self, subsets: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    ### PUBLIC PROPERTIES ###

    @property
    def n(self) -> int:
        r'Size of the ground set.'
        return self._n

    @property
    def members(self) -> tuple:
        r'The members of the family, in insertion order.'
        return self._members

    @property
    def size(self) -> int:
        r'Number of members, duplicates included.'
        return len(self._members)
