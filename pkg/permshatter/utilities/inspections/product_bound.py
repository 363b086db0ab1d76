from .slice_profile import slice_profile


def product_bound(points) -> int:
    r"""Returns ``prod s_i!`` over the index set of ``points``: the number of
    patterns every k-lex-shattering family (with ``k = |X|``) is guaranteed
    to induce on them.

    Basic usage:
        >>> permshatter.product_bound([(1, 1), (1, 2), (2, 1), (2, 2)])
        4
        >>> permshatter.product_bound([(1, 1), (2, 1), (3, 1), (3, 2)])
        12
    """
    return slice_profile(points).product_bound
