from typing import Union

import numpy as np


class Permutation():
    r"""A total order on the ground set ``[n]``, stored as a rank assignment.
    Element ``x`` sits at position ``rank[x - 1]`` of the order.

    Basic usage:
        Initialise it with the ranks of the elements ``1, 2, ..., n``:

        >>> rho = permshatter.Permutation([4, 2, 5, 1, 3])
        >>> rho.n
        5
        >>> rho.order
        (4, 2, 5, 1, 3)

        Here element 4 comes first and element 3 comes last. The same order
        can be given as the list of elements from first to last:

        >>> permshatter.Permutation.from_order([4, 2, 5, 1, 3]).rank
        (4, 2, 5, 1, 3)

    :attr:`precedes`:
        Compares two elements under the order:

        >>> rho = permshatter.Permutation.from_order([4, 2, 5, 1, 3])
        >>> rho.precedes(2, 1)
        True

    :meth:`identity` and :meth:`reversal`:
        The two monotone orders have their own constructors:

        >>> permshatter.Permutation.reversal(4).rank
        (4, 3, 2, 1)

    .. error::

        The ranks must form a bijection of ``[n]``:

        >>> permshatter.Permutation([1, 1, 2])
        ValueError: 'rank' must be a bijection of [3]
    """

    ### CLASS VARIABLES ###

    __slots__ = ('_rank', )

    ### INITIALISER ###

    def __init__(self,
                 rank: Union[list, tuple, np.ndarray],
                 ) -> None:
        r'Initialises self.'
        if isinstance(rank, np.ndarray):
            rank = rank.tolist()
        if not isinstance(rank, (list, tuple)):
            raise TypeError("'rank' must be 'list' or 'tuple'")
        if len(rank) == 0:
            raise ValueError("'rank' must not be empty")
        for value in rank:
            if isinstance(value, bool) or not isinstance(
                value, (int, np.integer)
            ):
                raise TypeError("'rank' must contain only 'int'")
        rank = tuple(int(value) for value in rank)
        if sorted(rank) != list(range(1, len(rank) + 1)):
            raise ValueError(f"'rank' must be a bijection of [{len(rank)}]")
        self._rank = rank

    ### SPECIAL METHODS ###

    def __repr__(self) -> str:
        r'Returns interpreter representation of :attr:`rank`.'
        return f'{type(self).__name__}({list(self._rank)})'

    def __len__(self) -> int:
        r'Returns the size of the ground set.'
        return len(self._rank)

    def __eq__(self, other) -> bool:
        r'Two permutations are equal when their ranks are.'
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._rank == other._rank

    def __hash__(self) -> int:
        return hash(self._rank)

    ### PUBLIC METHODS ###

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        r'The natural order of ``[n]``.'
        _check_size(n)
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def reversal(cls, n: int) -> 'Permutation':
        r'The reverse of the natural order, with ``rank(x) = n + 1 - x``.'
        _check_size(n)
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def from_order(cls, order: Union[list, tuple]) -> 'Permutation':
        r'Builds a permutation from its elements listed first to last.'
        if not isinstance(order, (list, tuple)):
            raise TypeError("'order' must be 'list' or 'tuple'")
        n = len(order)
        rank = [0] * n
        for position, element in enumerate(order, start=1):
            if not isinstance(element, int) or not 1 <= element <= n:
                raise ValueError(f"'order' must list the elements of [{n}]")
            rank[element - 1] = position
        return cls(rank)

    @classmethod
    def random(cls,
               n: int,
               rng: np.random.Generator,
               ) -> 'Permutation':
        r'A uniformly random permutation of ``[n]`` drawn from ``rng``.'
        _check_size(n)
        if not isinstance(rng, np.random.Generator):
            raise TypeError("'rng' must be 'numpy.random.Generator'")
        return cls(rng.permutation(n) + 1)

    def position(self, element: int) -> int:
        r'Returns the position of ``element`` in the order.'
        if not isinstance(element, int):
            raise TypeError("'element' must be 'int'")
        if not 1 <= element <= len(self._rank):
            raise ValueError(f"'element' must lie between 1 and "
                             f"{len(self._rank)}")
        return self._rank[element - 1]

    def precedes(self, x: int, y: int) -> bool:
        r'Returns whether ``x`` comes strictly before ``y``.'
        return self.position(x) < self.position(y)

    ### PUBLIC PROPERTIES ###

    @property
    def n(self) -> int:
        r'Size of the ground set.'
        return len(self._rank)

    @property
    def rank(self) -> tuple:
        r'Positions of the elements ``1, ..., n``.'
        return self._rank

    @property
    def order(self) -> tuple:
        r'Elements of ``[n]`` listed from first to last.'
        order = [0] * len(self._rank)
        for element, position in enumerate(self._rank, start=1):
            order[position - 1] = element
        return tuple(order)


def _check_size(n) -> None:
    if not isinstance(n, int):
        raise TypeError("'n' must be 'int'")
    if n < 1:
        raise ValueError("'n' must be a positive 'int'")
