from ...core._points import validate_points
from .first_diff import first_diff


def rigid_quadruple(points) -> tuple:
    r"""Finds two pairs of consecutive points (in standard lex order) whose
    first differing coordinates coincide, and returns the four points with
    that coordinate ``i``. The π-permutations sorting by coordinate ``i``
    induce four distinct patterns on them.

    The pairs are the earliest ones: the first index ``l`` and then the
    first ``m > l`` with ``first_diff(x_l, x_l+1) = first_diff(x_m, x_m+1)``.

    Basic usage:
        >>> permshatter.rigid_quadruple([(1, 1), (1, 2), (2, 1), (2, 2)])
        (((1, 1), (1, 2), (2, 1), (2, 2)), 2)

    .. error::

        Sets whose consecutive differences are all distinct have no such
        quadruple:

        >>> permshatter.rigid_quadruple([(1, 1), (1, 2), (2, 1)])
        ValueError: no two consecutive pairs share their first differing
        coordinate
    """
    points = validate_points(points, minimum=2)
    differences = [first_diff(x, y) for x, y in zip(points, points[1:])]
    for first, position in enumerate(differences):
        for second in range(first + 1, len(differences)):
            if differences[second] == position:
                quadruple = (points[first],
                             points[first + 1],
                             points[second],
                             points[second + 1],
                             )
                return quadruple, position
    raise ValueError('no two consecutive pairs share their first differing '
                     'coordinate')
