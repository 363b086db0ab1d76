from typing import Optional, Union

import numpy as np

from ._FamilyParent import _FamilyParent
from .Permutation import Permutation


class PermFamily(_FamilyParent):
    r"""An ordered list of permutations of the same ground set ``[n]``.
    Duplicates are allowed and count towards the size of the family.

    Basic usage:
        >>> family = permshatter.PermFamily([
        ...     permshatter.Permutation.identity(5),
        ...     permshatter.Permutation.reversal(5),
        ... ])
        >>> family.n
        5
        >>> len(family)
        2

        An empty family needs its ground set size:

        >>> permshatter.PermFamily([], n=8).n
        8

    :meth:`from_orders`:
        Members can also be listed as orders, first element first:

        >>> family = permshatter.PermFamily.from_orders(
        ...     [(1, 2, 3, 4), (4, 3, 2, 1), (2, 1, 4, 3)]
        ... )
        >>> family[2].rank
        (2, 1, 4, 3)

    JSON:
        Families are exchanged as ``{"n": n, "perms": [[rank of 1, ...,
        rank of n], ...]}``:

        >>> family.to_dict()
        {'n': 4, 'perms': [[1, 2, 3, 4], [4, 3, 2, 1], [2, 1, 4, 3]]}

    .. error::

        All members must share the ground set:

        >>> permshatter.PermFamily([
        ...     permshatter.Permutation.identity(3),
        ...     permshatter.Permutation.identity(4),
        ... ])
        ValueError: all members must be permutations of [3]
    """

    ### CLASS VARIABLES ###

    __slots__ = ('_ranks', )

    ### INITIALISER ###

    def __init__(self,
                 members: Union[list, tuple],
                 *,
                 n: Optional[int] = None,
                 ) -> None:
        r'Initialises self.'
        if not isinstance(members, (list, tuple)):
            raise TypeError("'members' must be 'list' or 'tuple'")
        if not all(isinstance(member, Permutation) for member in members):
            raise TypeError("'members' must contain only 'Permutation'")
        if n is None:
            if len(members) == 0:
                raise ValueError("'n' is required for an empty family")
            n = members[0].n
        super().__init__(members, n=n)
        if any(member.n != n for member in members):
            raise ValueError(f'all members must be permutations of [{n}]')
        self._ranks = np.array([member.rank for member in members],
                               dtype=np.int64).reshape(len(members), n)

    ### SPECIAL METHODS ###

    def __eq__(self, other) -> bool:
        if not isinstance(other, PermFamily):
            return NotImplemented
        return self._n == other._n and self._members == other._members

    def __hash__(self) -> int:
        return hash((self._n, self._members))

    def __add__(self, other: 'PermFamily') -> 'PermFamily':
        r'Concatenates two families over the same ground set.'
        if not isinstance(other, PermFamily):
            return NotImplemented
        if other.n != self._n:
            raise ValueError('families must share the ground set')
        return PermFamily(self._members + other.members, n=self._n)

    ### PUBLIC METHODS ###

    @classmethod
    def from_orders(cls,
                    orders: Union[list, tuple],
                    *,
                    n: Optional[int] = None,
                    ) -> 'PermFamily':
        r'Builds a family from orders listed first element first.'
        return cls([Permutation.from_order(list(order)) for order in orders],
                   n=n)

    @classmethod
    def from_rank_matrix(cls, ranks: np.ndarray) -> 'PermFamily':
        r'Builds a family from an ``(m, n)`` array of 1-based ranks.'
        ranks = np.asarray(ranks, dtype=np.int64)
        if ranks.ndim != 2:
            raise ValueError("'ranks' must be a two-dimensional array")
        return cls([Permutation(row) for row in ranks], n=ranks.shape[1])

    @classmethod
    def random(cls,
               n: int,
               size: int,
               *,
               seed: Union[int, np.random.Generator] = 0,
               ) -> 'PermFamily':
        r"""A family of ``size`` independent uniformly random permutations of
        ``[n]``, fully determined by ``seed``.
        """
        if not isinstance(size, int):
            raise TypeError("'size' must be 'int'")
        if size < 0:
            raise ValueError("'size' must be a nonnegative 'int'")
        rng = np.random.default_rng(seed)
        members = [Permutation.random(n, rng) for _ in range(size)]
        return cls(members, n=n)

    def to_dict(self) -> dict:
        r'The perm-core JSON representation of the family.'
        return {'n': self._n,
                'perms': [list(member.rank) for member in self._members],
                }

    @classmethod
    def from_dict(cls, data: dict) -> 'PermFamily':
        r'Inverse of :meth:`to_dict`.'
        if not isinstance(data, dict):
            raise TypeError("'data' must be 'dict'")
        if 'n' not in data or 'perms' not in data:
            raise ValueError("family data must have 'n' and 'perms' keys")
        return cls([Permutation(rank) for rank in data['perms']],
                   n=data['n'])

    ### PRIVATE METHODS ###

    def _keys(self, subsets: np.ndarray) -> np.ndarray:
        return self._ranks[:, subsets - 1]

    ### PUBLIC PROPERTIES ###

    @property
    def rank_matrix(self) -> np.ndarray:
        r'``(m, n)`` array holding the ranks of every member.'
        return self._ranks.copy()
