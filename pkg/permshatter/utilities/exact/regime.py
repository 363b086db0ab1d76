import math

from ...core._patterns import ceil_log2
from ...records.RegimeAnswer import RegimeAnswer


def regime(k: int, t: int) -> RegimeAnswer:
    r"""Classifies how the least size of a family of permutations of ``[n]``
    that t-shatters every k-subset grows with ``n``.

    With ``h = ceil(log2(k))`` and ``k >= 4``:

    * ``t <= 2``: exactly ``t`` (``exact-t``);
    * ``3 <= t <= 2**h``: ``Θ(log log n)`` (``loglog``);
    * ``2**h < t <= min(2k, 2**h + 4)``: ``Θ(√log n)`` (``sqrtlog``);
    * ``t > 2**(k - 1)``: ``Θ(log n)`` (``log``);
    * anything else is ``unknown``.

    For ``k = 3`` the row is complete: ``exact-t`` up to 2, ``loglog`` for 3
    and 4, ``log`` for 5 and 6.

    Basic usage:
        >>> permshatter.regime(4, 8).regime
        'sqrtlog'
        >>> permshatter.regime(4, 9).regime
        'log'
        >>> permshatter.regime(5, 13).regime
        'unknown'
        >>> permshatter.regime(3, 4).regime
        'loglog'

    .. error::

        >>> permshatter.regime(4, 25)
        ValueError: 't' must lie between 1 and 4! = 24
    """
    for name, value in (('k', k), ('t', t)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"'{name}' must be 'int'")
    if k < 3:
        raise ValueError("'k' must be at least 3")
    if not 1 <= t <= math.factorial(k):
        raise ValueError(f"'t' must lie between 1 and {k}! = "
                         f"{math.factorial(k)}")
    if t <= 2:
        return RegimeAnswer(k, t, 'exact-t')
    if k == 3:
        return RegimeAnswer(k, t, 'loglog' if t <= 4 else 'log')
    power = 2 ** ceil_log2(k)
    if t <= power:
        return RegimeAnswer(k, t, 'loglog')
    if t <= min(2 * k, power + 4):
        return RegimeAnswer(k, t, 'sqrtlog')
    if t > 2 ** (k - 1):
        return RegimeAnswer(k, t, 'log')
    return RegimeAnswer(k, t, 'unknown')
