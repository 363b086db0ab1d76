import numpy as np


def encode(n: int, b: int, d: int, x: int) -> tuple:
    r"""Identifies an element of ``[n]`` with a point of ``[b]^d``: the
    coordinates are the base-``b`` digits of ``x - 1``, most significant
    first, each shifted up by one. The standard lex order of the points then
    agrees with the natural order of ``[n]``.

    Basic usage:
        >>> permshatter.encode(4, 2, 2, 1)
        (1, 1)
        >>> permshatter.encode(4, 2, 2, 4)
        (2, 2)
        >>> permshatter.encode(10, 3, 3, 8)
        (1, 3, 2)

    .. error::

        ``n`` must not exceed the number of points of the cube:

        >>> permshatter.encode(5, 2, 2, 1)
        ValueError: 'n' must not exceed b ** d
    """
    _check_cube(n, b, d)
    if not isinstance(x, int) or isinstance(x, bool):
        raise TypeError("'x' must be 'int'")
    if not 1 <= x <= n:
        raise ValueError(f"'x' must lie between 1 and {n}")
    digits = []
    value = x - 1
    for _ in range(d):
        value, digit = divmod(value, b)
        digits.append(digit + 1)
    return tuple(reversed(digits))


def decode(n: int, b: int, d: int, point: tuple) -> int:
    r"""Inverse of :func:`encode`.

    Basic usage:
        >>> permshatter.decode(4, 2, 2, (2, 1))
        3
    """
    _check_cube(n, b, d)
    if not isinstance(point, (tuple, list)):
        raise TypeError("'point' must be 'tuple' or 'list'")
    if len(point) != d:
        raise ValueError(f"'point' must have {d} coordinates")
    value = 0
    for coordinate in point:
        if not isinstance(coordinate, int) or not 1 <= coordinate <= b:
            raise ValueError(f"'point' coordinates must lie between 1 and {b}")
        value = value * b + coordinate - 1
    if value >= n:
        raise ValueError(f"'point' does not encode an element of [{n}]")
    return value + 1


def encode_array(elements: np.ndarray, b: int, d: int) -> np.ndarray:
    r"""Vectorised :func:`encode` without range checks: maps an integer array
    of elements to an array with a trailing axis of ``d`` coordinates.
    """
    if b ** d > 2 ** 62:
        raise ValueError('cube too large for 64-bit element encoding')
    elements = np.asarray(elements, dtype=np.int64) - 1
    powers = b ** np.arange(d - 1, -1, -1, dtype=np.int64)
    return (elements[..., None] // powers) % b + 1


def _check_cube(n, b, d) -> None:
    for name, value in (('n', n), ('b', b), ('d', d)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"'{name}' must be 'int'")
        if value < 1:
            raise ValueError(f"'{name}' must be a positive 'int'")
    if n > b ** d:
        raise ValueError("'n' must not exceed b ** d")
