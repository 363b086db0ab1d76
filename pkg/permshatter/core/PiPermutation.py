from typing import Optional

import numpy as np

from ..utilities.inspections.first_diff import first_diff
from ._patterns import ranks_from_keys
from ._points import validate_point
from .Permutation import Permutation


class PiPermutation():
    r"""An order of ``[b]^d`` that first sorts points by their coordinate
    ``position`` (increasing when ``sigma`` is ``'standard'``, decreasing
    when it is ``'reverse'``) and breaks ties by the standard lex order or
    its reverse, according to ``tau``.

    Basic usage:
        >>> pi = permshatter.PiPermutation(2, 'standard', 'standard',
        ...                                b=2, d=2)
        >>> pi.sorted_points([(1, 1), (1, 2), (2, 1), (2, 2)])
        ((1, 1), (2, 1), (1, 2), (2, 2))

        With ``position=1`` and both directions standard it is the standard
        lex order itself:

        >>> pi = permshatter.PiPermutation(1, 'standard', 'standard',
        ...                                b=2, d=2)
        >>> pi.materialize().order
        (1, 2, 3, 4)
    """

    ### CLASS VARIABLES ###

    __slots__ = ('_position',
                 '_sigma',
                 '_tau',
                 '_b',
                 '_d',
                 )

    _DIRECTIONS = ('standard', 'reverse')

    ### INITIALISER ###

    def __init__(self,
                 position: int,
                 sigma: str,
                 tau: str,
                 *,
                 b: int,
                 d: int,
                 ) -> None:
        r'Initialises self.'
        for name, value in (('b', b), ('d', d), ('position', position)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"'{name}' must be 'int'")
        if b < 1 or d < 1:
            raise ValueError("'b' and 'd' must be positive 'int'")
        if not 1 <= position <= d:
            raise ValueError(f"'position' must lie between 1 and {d}")
        for name, value in (('sigma', sigma), ('tau', tau)):
            if value not in self._DIRECTIONS:
                raise ValueError(f"'{name}' must be 'standard' or 'reverse'")
        self._position = position
        self._sigma = sigma
        self._tau = tau
        self._b = b
        self._d = d

    ### SPECIAL METHODS ###

    def __repr__(self) -> str:
        return (f'{type(self).__name__}({self._position}, {self._sigma!r}, '
                f'{self._tau!r}, b={self._b}, d={self._d})')

    def __eq__(self, other) -> bool:
        if not isinstance(other, PiPermutation):
            return NotImplemented
        return self.as_tuple() == other.as_tuple() and (
            (self._b, self._d) == (other._b, other._d)
        )

    def __hash__(self) -> int:
        return hash(self.as_tuple() + (self._b, self._d))

    ### PUBLIC METHODS ###

    def compare(self, x: tuple, y: tuple) -> int:
        r"""Returns ``-1`` if ``x`` precedes ``y`` and ``1`` if ``y``
        precedes ``x``.
        """
        x = validate_point(x, b=self._b, d=self._d)
        y = validate_point(y, b=self._b, d=self._d)
        i = self._position - 1
        if x[i] != y[i]:
            before = x[i] < y[i]
            return -1 if before == (self._sigma == 'standard') else 1
        j = first_diff(x, y) - 1
        before = x[j] < y[j]
        return -1 if before == (self._tau == 'standard') else 1

    def precedes(self, x: tuple, y: tuple) -> bool:
        r'Returns whether ``x`` comes strictly before ``y``.'
        return self.compare(x, y) < 0

    def keys(self, points: np.ndarray) -> np.ndarray:
        r"""Sort keys of an integer array of points whose last axis holds the
        ``d`` coordinates.
        """
        points = np.asarray(points, dtype=np.int64)
        if points.shape[-1] != self._d:
            raise ValueError(f"'points' must have {self._d} coordinates")
        if self._b ** (self._d + 1) > 2 ** 62:
            raise ValueError('cube too large for 64-bit keys')
        digits = points - 1
        if self._tau == 'reverse':
            digits = self._b - 1 - digits
        keys = np.zeros(points.shape[:-1], dtype=np.int64)
        for i in range(self._d):
            keys = keys * self._b + digits[..., i]
        leading = points[..., self._position - 1] - 1
        if self._sigma == 'reverse':
            leading = self._b - 1 - leading
        return leading * self._b ** self._d + keys

    def materialize(self, points: Optional[list] = None) -> Permutation:
        r"""The order restricted to ``points``, as a permutation whose element
        ``j`` is ``points[j - 1]``. Defaults to all of ``[b]^d`` in standard
        lex order.
        """
        if points is None:
            points = (np.indices((self._b, ) * self._d)
                      .reshape(self._d, -1).T + 1)
        else:
            if not isinstance(points, (list, tuple)):
                raise TypeError("'points' must be 'list' or 'tuple'")
            validated = [validate_point(point, b=self._b, d=self._d)
                         for point in points]
            if len(set(validated)) != len(validated):
                raise ValueError("'points' must not contain duplicates")
            points = np.array(validated, dtype=np.int64)
        return Permutation(ranks_from_keys(self.keys(points)))

    def sorted_points(self, points) -> tuple:
        r'Sorts points from first to last under the order.'
        points = [validate_point(point, b=self._b, d=self._d)
                  for point in points]
        keys = self.keys(np.array(points, dtype=np.int64))
        return tuple(points[index] for index in np.argsort(keys))

    def as_tuple(self) -> tuple:
        r'``(position, sigma, tau)``, the JSON form of the order.'
        return (self._position, self._sigma, self._tau)

    ### PUBLIC PROPERTIES ###

    @property
    def position(self) -> int:
        r'Coordinate that is sorted first.'
        return self._position

    @property
    def sigma(self) -> str:
        r'Direction of the first sort.'
        return self._sigma

    @property
    def tau(self) -> str:
        r'Direction of the tie-breaking lex order.'
        return self._tau

    @property
    def b(self) -> int:
        return self._b

    @property
    def d(self) -> int:
        return self._d
