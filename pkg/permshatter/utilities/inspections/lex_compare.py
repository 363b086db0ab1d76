from ...core.LexPermutation import LexPermutation


def lex_compare(rho: LexPermutation, x: tuple, y: tuple) -> str:
    r"""Compares two distinct points under a lex-permutation and returns
    ``'less'`` when ``x`` comes first and ``'greater'`` otherwise.

    Basic usage:
        >>> rho = permshatter.LexPermutation.identity(2, 3)
        >>> permshatter.lex_compare(rho, (1, 1, 2), (1, 2, 1))
        'less'

        The component at the first differing coordinate decides:

        >>> rho = permshatter.LexPermutation([
        ...     permshatter.Permutation.from_order([2, 1, 3]),
        ...     permshatter.Permutation.identity(3),
        ... ])
        >>> permshatter.lex_compare(rho, (1, 1), (2, 3))
        'greater'

    .. error::

        >>> permshatter.lex_compare(rho, (1, 1), (1, 1))
        ValueError: points must be distinct
    """
    if not isinstance(rho, LexPermutation):
        raise TypeError("'rho' must be 'LexPermutation'")
    return 'less' if rho.compare(x, y) < 0 else 'greater'
