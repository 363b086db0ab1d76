import math

from ...core._patterns import ceil_log2


def lower_bound_thresholds(n: int, k: int) -> tuple:
    r"""Returns the two family sizes below which the adversaries are
    guaranteed to find a poorly shattered k-subset of ``[n]``:
    ``log2(n) / k - 1`` for :func:`chain_witness` and
    ``sqrt(log2(n)) / ceil(log2(k)) - 1`` for :func:`tree_witness`.

    Basic usage:
        >>> permshatter.lower_bound_thresholds(4096, 4)[0]
        2.0
        >>> chain, tree = permshatter.lower_bound_thresholds(256, 4)
        >>> round(tree, 3)
        0.414

        Small ground sets give no bound at all:

        >>> permshatter.lower_bound_thresholds(2, 3)[0] < 0
        True
    """
    for name, value in (('n', n), ('k', k)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"'{name}' must be 'int'")
    if n < 2:
        raise ValueError("'n' must be at least 2")
    if k < 3:
        raise ValueError("'k' must be at least 3")
    log = math.log2(n)
    return (log / k - 1, math.sqrt(log) / ceil_log2(k) - 1)
