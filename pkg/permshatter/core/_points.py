"""
Validation of point sets of a cube ``[b]^d``.
"""

from typing import Optional

import numpy as np


def validate_point(point,
                   *,
                   b: Optional[int] = None,
                   d: Optional[int] = None,
                   ) -> tuple:
    r'Returns ``point`` as a tuple of ints after checking its coordinates.'
    if isinstance(point, np.ndarray):
        point = point.tolist()
    if not isinstance(point, (tuple, list)):
        raise TypeError("points must be 'tuple' or 'list'")
    if len(point) == 0:
        raise ValueError('points must have at least one coordinate')
    if not all(isinstance(value, (int, np.integer))
               and not isinstance(value, bool) for value in point):
        raise TypeError("point coordinates must be 'int'")
    point = tuple(int(value) for value in point)
    if d is not None and len(point) != d:
        raise ValueError(f'points must have {d} coordinates')
    if min(point) < 1 or (b is not None and max(point) > b):
        upper = b if b is not None else 'b'
        raise ValueError(f'point coordinates must lie between 1 and {upper}')
    return point


def validate_points(points,
                    *,
                    b: Optional[int] = None,
                    d: Optional[int] = None,
                    minimum: int = 1,
                    ) -> tuple:
    r"""Returns a nonempty collection of distinct points of a common
    dimension as a tuple sorted in standard lex order.
    """
    if isinstance(points, np.ndarray):
        points = points.tolist()
    if not isinstance(points, (list, tuple, set, frozenset)):
        raise TypeError("'points' must be 'list', 'tuple' or 'set'")
    points = [validate_point(point, b=b, d=d) for point in points]
    if len(points) < minimum:
        raise ValueError(f"'points' must contain at least {minimum} "
                         f"point{'s' if minimum > 1 else ''}")
    if len({len(point) for point in points}) > 1:
        raise ValueError('points must have the same dimension')
    if len(set(points)) != len(points):
        raise ValueError("'points' must not contain duplicates")
    return tuple(sorted(points))
