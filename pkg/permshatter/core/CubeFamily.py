import logging
from typing import Any, Optional, Union

import numpy as np

from ..utilities.constructions.encode import encode_array
from ._FamilyParent import _FamilyParent
from ._patterns import ranks_from_keys
from .LexPermutation import LexPermutation
from .PermFamily import PermFamily
from .Permutation import Permutation
from .PiPermutation import PiPermutation

logger = logging.getLogger(__name__)


class CubeFamily(_FamilyParent):
    r"""A family of orders of the cube ``[b]^d`` (lex-permutations and
    π-permutations), seen as a family of permutations of ``[n]`` through
    :func:`permshatter.encode`. Sort keys are computed on the fly, so ``n``
    may be far too large for the family to be materialised.

    Basic usage:
        >>> family = permshatter.CubeFamily(
        ...     [permshatter.LexPermutation.identity(2, 3),
        ...      permshatter.LexPermutation.reversal(2, 3)],
        ...     b=2,
        ...     d=3,
        ... )
        >>> family.n
        8
        >>> permshatter.count_induced(family, [1, 4, 7])
        2

        ``n`` defaults to ``b ** d`` and may be smaller:

        >>> family = permshatter.CubeFamily(
        ...     [permshatter.LexPermutation.identity(2, 3)],
        ...     b=2,
        ...     d=3,
        ...     n=6,
        ... )
        >>> family.n
        6

    :meth:`to_perm_family`:
        Materialises the family as a :class:`PermFamily` of ``[n]``.

    :attr:`lex_report`:
        Families returned by the randomised constructions carry the
        :class:`LexShatterReport` that certified their lex members.

    .. note::

        When ``n`` times the number of members is small, the ranks of all
        elements are computed once and cached, and keys are read off that
        table.
    """

    ### CLASS VARIABLES ###

    __slots__ = ('_b',
                 '_d',
                 '_lex_indices',
                 '_pi_indices',
                 '_lex_table',
                 '_rank_matrix',
                 '_lex_report',
                 )

    _MATERIALIZE_LIMIT = 2 ** 22

    ### INITIALISER ###

    def __init__(self,
                 members: Union[list, tuple],
                 *,
                 b: int,
                 d: int,
                 n: Optional[int] = None,
                 lex_report: Any = None,
                 ) -> None:
        r'Initialises self.'
        for name, value in (('b', b), ('d', d)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"'{name}' must be 'int'")
            if value < 1:
                raise ValueError(f"'{name}' must be a positive 'int'")
        if n is None:
            n = b ** d
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError("'n' must be 'int'")
        if n > b ** d:
            raise ValueError("'n' must not exceed b ** d")
        if not isinstance(members, (list, tuple)):
            raise TypeError("'members' must be 'list' or 'tuple'")
        for member in members:
            if not isinstance(member, (LexPermutation, PiPermutation)):
                raise TypeError("'members' must contain only "
                                "'LexPermutation' or 'PiPermutation'")
            if (member.b, member.d) != (b, d):
                raise ValueError(f'all members must be orders of [{b}]^{d}')
        super().__init__(members, n=n)
        self._b = b
        self._d = d
        self._lex_indices = np.array(
            [index for index, member in enumerate(members)
             if isinstance(member, LexPermutation)],
            dtype=np.int64,
        )
        self._pi_indices = np.array(
            [index for index, member in enumerate(members)
             if isinstance(member, PiPermutation)],
            dtype=np.int64,
        )
        if len(self._lex_indices) > 0:
            self._lex_table = np.stack(
                [members[index].rank_table for index in self._lex_indices]
            )
        else:
            self._lex_table = np.zeros((0, d, b), dtype=np.int64)
        self._rank_matrix = None
        self._lex_report = lex_report

    ### SPECIAL METHODS ###

    def __repr__(self) -> str:
        return (f'{type(self).__name__}(b={self._b}, d={self._d}, '
                f'n={self._n}, size={len(self)})')

    def __eq__(self, other) -> bool:
        if not isinstance(other, CubeFamily):
            return NotImplemented
        return ((self._b, self._d, self._n, self._members)
                == (other._b, other._d, other._n, other._members))

    def __hash__(self) -> int:
        return hash((self._b, self._d, self._n, self._members))

    ### PUBLIC METHODS ###

    def restrict(self, n: int) -> 'CubeFamily':
        r'The same members seen as a family of ``[n]``.'
        return CubeFamily(self._members,
                          b=self._b,
                          d=self._d,
                          n=n,
                          lex_report=self._lex_report,
                          )

    def lex_family(self) -> 'CubeFamily':
        r'The family of the lex-permutation members only.'
        return CubeFamily(self.lex_members,
                          b=self._b,
                          d=self._d,
                          n=self._n,
                          lex_report=self._lex_report,
                          )

    def to_perm_family(self) -> PermFamily:
        r'Materialises the family as explicit permutations of ``[n]``.'
        ranks = self._materialized_ranks()
        return PermFamily([Permutation(row) for row in ranks], n=self._n)

    def to_dict(self) -> dict:
        r"""The lex family JSON representation: ``b``, ``d``, ``n``, the
        component ranks of every lex member and ``[position, sigma, tau]``
        for every π member.
        """
        return {'b': self._b,
                'd': self._d,
                'n': self._n,
                'members': [member.to_list() for member in self.lex_members],
                'pi': [list(member.as_tuple()) for member in self.pi_members],
                }

    @classmethod
    def from_dict(cls, data: dict) -> 'CubeFamily':
        r'Inverse of :meth:`to_dict`; ``n`` and ``pi`` are optional.'
        if not isinstance(data, dict):
            raise TypeError("'data' must be 'dict'")
        for key in ('b', 'd', 'members'):
            if key not in data:
                raise ValueError(f"lex family data must have a '{key}' key")
        b, d = data['b'], data['d']
        members = [LexPermutation.from_list(ranks)
                   for ranks in data['members']]
        members += [PiPermutation(position, sigma, tau, b=b, d=d)
                    for position, sigma, tau in data.get('pi', [])]
        return cls(members, b=b, d=d, n=data.get('n'))

    ### PRIVATE METHODS ###

    def _keys(self, subsets: np.ndarray) -> np.ndarray:
        if len(self) * self._n <= self._MATERIALIZE_LIMIT:
            return self._materialized_ranks()[:, subsets - 1]
        return self._implicit_keys(subsets)

    def _implicit_keys(self, subsets: np.ndarray) -> np.ndarray:
        points = encode_array(subsets, self._b, self._d)
        keys = np.empty((len(self), ) + subsets.shape, dtype=np.int64)
        if len(self._lex_indices) > 0:
            if self._b ** self._d > 2 ** 62:
                raise ValueError('cube too large for 64-bit keys')
            lex_keys = np.zeros((len(self._lex_indices), ) + subsets.shape,
                                dtype=np.int64)
            for i in range(self._d):
                lex_keys = (lex_keys * self._b
                            + self._lex_table[:, i, points[..., i] - 1])
            keys[self._lex_indices] = lex_keys
        for index in self._pi_indices:
            keys[index] = self._members[index].keys(points)
        return keys

    def _materialized_ranks(self) -> np.ndarray:
        if self._rank_matrix is None:
            logger.debug('materialising %d members over [%d]', len(self),
                         self._n)
            elements = np.arange(1, self._n + 1, dtype=np.int64)[None, :]
            self._rank_matrix = ranks_from_keys(
                self._implicit_keys(elements)[:, 0, :]
            )
        return self._rank_matrix

    ### PUBLIC PROPERTIES ###

    @property
    def b(self) -> int:
        r'Base of the cube.'
        return self._b

    @property
    def d(self) -> int:
        r'Dimension of the cube.'
        return self._d

    @property
    def lex_members(self) -> tuple:
        r'The lex-permutation members, in insertion order.'
        return tuple(self._members[index] for index in self._lex_indices)

    @property
    def pi_members(self) -> tuple:
        r'The π-permutation members, in insertion order.'
        return tuple(self._members[index] for index in self._pi_indices)

    @property
    def lex_report(self) -> Any:
        r'Certificate of the lex members, when the family was constructed.'
        return self._lex_report
