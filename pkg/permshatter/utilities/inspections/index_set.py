from ...core._points import validate_points
from .first_diff import first_diff


def index_set(points) -> tuple:
    r"""Returns the sorted positions that occur as the slice position of some
    subset of ``points`` with at least two points. They are the first
    differing coordinates of consecutive points in standard lex order.

    Basic usage:
        >>> permshatter.index_set([(1, 1), (1, 2), (2, 1), (2, 2)])
        (1, 2)
        >>> permshatter.index_set([(1, 1, 1), (1, 1, 2), (1, 2, 1)])
        (2, 3)

    .. error::

        >>> permshatter.index_set([(1, 1)])
        ValueError: 'points' must contain at least 2 points
    """
    points = validate_points(points, minimum=2)
    return tuple(sorted({first_diff(x, y)
                         for x, y in zip(points, points[1:])}))
