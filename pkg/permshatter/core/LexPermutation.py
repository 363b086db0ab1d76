from typing import Optional, Union

import numpy as np

from ..utilities.inspections.first_diff import first_diff
from ._patterns import ranks_from_keys
from ._points import validate_point, validate_points
from .Permutation import Permutation


class LexPermutation():
    r"""An order of the cube ``[b]^d`` given by ``d`` component permutations
    of ``[b]``. Two distinct points are compared by the component at the
    first coordinate where they differ.

    Basic usage:
        >>> rho = permshatter.LexPermutation([
        ...     permshatter.Permutation.from_order([2, 1, 3]),
        ...     permshatter.Permutation.identity(3),
        ... ])
        >>> rho.b, rho.d
        (3, 2)
        >>> rho.compare((1, 1), (2, 3))
        1

        ``compare`` returns ``-1`` when the first point comes first and ``1``
        otherwise. Here the points differ first at coordinate 1, where the
        first component puts 2 before 1.

    :meth:`materialize`:
        Returns the order as a :class:`Permutation` of a list of points
        (all of ``[b]^d`` in standard lex order by default):

        >>> rho = permshatter.LexPermutation.identity(2, 2)
        >>> rho.materialize().order
        (1, 2, 3, 4)

    :meth:`keys`:
        Integer sort keys of points, vectorised over any leading axes. The
        key of ``x`` is the position of ``x`` in the order of the whole
        cube, counted from zero.

        >>> rho.keys(np.array([[2, 1], [1, 2]]))
        array([2, 1])

    .. note::

        The components are stored as a compact ``(d, b)`` table of zero-based
        ranks, so that dimensions in the tens of thousands stay cheap.
        Keys require ``b ** d`` to fit in a signed 64-bit integer; the
        comparison methods have no such limit.
    """

    ### CLASS VARIABLES ###

    __slots__ = ('_table', )

    ### INITIALISER ###

    def __init__(self, components: Union[list, tuple]) -> None:
        r'Initialises self.'
        if not isinstance(components, (list, tuple)):
            raise TypeError("'components' must be 'list' or 'tuple'")
        if len(components) == 0:
            raise ValueError("'components' must not be empty")
        if not all(isinstance(component, Permutation)
                   for component in components):
            raise TypeError("'components' must contain only 'Permutation'")
        b = components[0].n
        if any(component.n != b for component in components):
            raise ValueError(f'all components must be permutations of [{b}]')
        table = np.array([component.rank for component in components]) - 1
        self._table = table.astype(np.min_scalar_type(b - 1))

    ### SPECIAL METHODS ###

    def __repr__(self) -> str:
        r'Returns interpreter representation of the component ranks.'
        return f'{type(self).__name__}({self.to_list()})'

    def __eq__(self, other) -> bool:
        if not isinstance(other, LexPermutation):
            return NotImplemented
        return (self._table.shape == other._table.shape
                and bool(np.array_equal(self._table, other._table)))

    def __hash__(self) -> int:
        return hash((self._table.shape, self._table.tobytes()))

    ### PUBLIC METHODS ###

    @classmethod
    def from_table(cls, table: np.ndarray) -> 'LexPermutation':
        r"""Builds a lex-permutation from a ``(d, b)`` array whose rows hold
        the zero-based ranks of the values ``1, ..., b``.
        """
        table = np.asarray(table)
        if table.ndim != 2 or table.shape[0] < 1 or table.shape[1] < 1:
            raise ValueError("'table' must be a nonempty (d, b) array")
        b = table.shape[1]
        if not np.array_equal(np.sort(table, axis=1),
                              np.broadcast_to(np.arange(b), table.shape)):
            raise ValueError(f"every row of 'table' must be a permutation "
                             f"of 0..{b - 1}")
        rho = cls.__new__(cls)
        rho._table = table.astype(np.min_scalar_type(b - 1))
        return rho

    @classmethod
    def identity(cls, b: int, d: int) -> 'LexPermutation':
        r'The standard lex order of ``[b]^d``.'
        _check_cube(b, d)
        return cls.from_table(np.tile(np.arange(b), (d, 1)))

    @classmethod
    def reversal(cls, b: int, d: int) -> 'LexPermutation':
        r'The reverse of the standard lex order of ``[b]^d``.'
        _check_cube(b, d)
        return cls.from_table(np.tile(np.arange(b - 1, -1, -1), (d, 1)))

    @classmethod
    def random(cls,
               b: int,
               d: int,
               rng: np.random.Generator,
               ) -> 'LexPermutation':
        r'A lex-permutation with independent uniform components.'
        _check_cube(b, d)
        if not isinstance(rng, np.random.Generator):
            raise TypeError("'rng' must be 'numpy.random.Generator'")
        table = np.argsort(rng.random((d, b)), axis=1)
        return cls.from_table(table)

    def compare(self, x: tuple, y: tuple) -> int:
        r"""Returns ``-1`` if ``x`` precedes ``y`` and ``1`` if ``y``
        precedes ``x``.
        """
        x = validate_point(x, b=self.b, d=self.d)
        y = validate_point(y, b=self.b, d=self.d)
        i = first_diff(x, y) - 1
        row = self._table[i]
        return -1 if row[x[i] - 1] < row[y[i] - 1] else 1

    def precedes(self, x: tuple, y: tuple) -> bool:
        r'Returns whether ``x`` comes strictly before ``y``.'
        return self.compare(x, y) < 0

    def keys(self, points: np.ndarray) -> np.ndarray:
        r"""Sort keys of an integer array of points whose last axis holds the
        ``d`` coordinates.
        """
        points = np.asarray(points, dtype=np.int64)
        if points.shape[-1] != self.d:
            raise ValueError(f"'points' must have {self.d} coordinates")
        if self.b ** self.d > 2 ** 62:
            raise ValueError('cube too large for 64-bit keys')
        keys = np.zeros(points.shape[:-1], dtype=np.int64)
        for i in range(self.d):
            keys = keys * self.b + self._table[i, points[..., i] - 1]
        return keys

    def materialize(self, points: Optional[list] = None) -> Permutation:
        r"""The order restricted to ``points``, as a permutation whose element
        ``j`` is ``points[j - 1]``. Defaults to all of ``[b]^d`` in standard
        lex order.
        """
        if points is None:
            points = np.indices((self.b, ) * self.d).reshape(self.d, -1).T + 1
        else:
            if not isinstance(points, (list, tuple)):
                raise TypeError("'points' must be 'list' or 'tuple'")
            validated = [validate_point(point, b=self.b, d=self.d)
                         for point in points]
            if len(set(validated)) != len(validated):
                raise ValueError("'points' must not contain duplicates")
            points = np.array(validated, dtype=np.int64)
        return Permutation(ranks_from_keys(self.keys(points)))

    def sorted_points(self, points) -> tuple:
        r'Sorts points from first to last under the order.'
        points = validate_points(points, b=self.b, d=self.d)
        keys = self.keys(np.array(points, dtype=np.int64))
        return tuple(points[index] for index in np.argsort(keys))

    def to_list(self) -> list:
        r'Component ranks (1-based), one list per coordinate.'
        return (self._table.astype(np.int64) + 1).tolist()

    @classmethod
    def from_list(cls, ranks: list) -> 'LexPermutation':
        r'Inverse of :meth:`to_list`.'
        if not isinstance(ranks, (list, tuple)):
            raise TypeError("'ranks' must be 'list' or 'tuple'")
        return cls.from_table(np.array(ranks, dtype=np.int64) - 1)

    ### PUBLIC PROPERTIES ###

    @property
    def b(self) -> int:
        r'Base of the cube.'
        return self._table.shape[1]

    @property
    def d(self) -> int:
        r'Dimension of the cube.'
        return self._table.shape[0]

    @property
    def components(self) -> tuple:
        r'The component permutations of ``[b]``, first coordinate first.'
        return tuple(Permutation(row + 1)
                     for row in self._table.astype(np.int64))

    @property
    def rank_table(self) -> np.ndarray:
        r'``(d, b)`` array of zero-based component ranks.'
        return self._table.copy()


def _check_cube(b, d) -> None:
    for name, value in (('b', b), ('d', d)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"'{name}' must be 'int'")
        if value < 1:
            raise ValueError(f"'{name}' must be a positive 'int'")
