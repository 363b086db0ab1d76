def first_diff(x: tuple, y: tuple) -> int:
    r"""Returns the first (1-based) coordinate at which two points of the
    same cube differ.

    Basic usage:
        >>> permshatter.first_diff((1, 2, 1), (1, 1, 2))
        2
        >>> permshatter.first_diff((2, 2), (1, 2))
        1

    .. error::

        Equal points have no differing coordinate:

        >>> permshatter.first_diff((1, 1), (1, 1))
        ValueError: points must be distinct
    """
    if not isinstance(x, (tuple, list)) or not isinstance(y, (tuple, list)):
        raise TypeError("points must be 'tuple' or 'list'")
    if len(x) != len(y):
        raise ValueError('points must have the same dimension')
    for position, (x_i, y_i) in enumerate(zip(x, y), start=1):
        if x_i != y_i:
            return position
    raise ValueError('points must be distinct')
