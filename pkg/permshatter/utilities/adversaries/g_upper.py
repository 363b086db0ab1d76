from ...core._patterns import ceil_log2


def g_upper(c: int, h: int) -> int:
    r"""Height of a complete binary tree that guarantees, for any colouring
    of its vertices with ``c`` colours, a subdivision of the complete binary
    tree of height ``h`` with monochromatic internal layers:
    ``h * ceil(log2(c**(h - 1) + 1))``.

    Basic usage:
        >>> permshatter.g_upper(2, 2)
        4
        >>> permshatter.g_upper(5, 0)
        0
        >>> permshatter.g_upper(1, 3)
        3
    """
    for name, value in (('c', c), ('h', h)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"'{name}' must be 'int'")
    if c < 1:
        raise ValueError("'c' must be a positive 'int'")
    if h < 0:
        raise ValueError("'h' must be a nonnegative 'int'")
    if h == 0:
        return 0
    return h * ceil_log2(c ** (h - 1) + 1)


def search_height(c: int, h: int) -> int:
    r"""Height the recursive subdivision search descends through:
    ``sum(ceil(log2(c**(j - 1) + 1)) for j in 1..h)``, at most
    :func:`g_upper`.
    """
    return sum(ceil_log2(c ** (j - 1) + 1) for j in range(1, h + 1))
