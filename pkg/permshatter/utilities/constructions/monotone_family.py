from ...core.PermFamily import PermFamily
from ...core.Permutation import Permutation


def monotone_family(n: int, t: int) -> PermFamily:
    r"""Returns the smallest family that t-shatters every subset of ``[n]``
    for ``t`` in ``{1, 2}``: the identity, plus the reversal when ``t = 2``.

    Basic usage:
        >>> len(permshatter.monotone_family(5, 1))
        1
        >>> family = permshatter.monotone_family(5, 2)
        >>> family[1].rank
        (5, 4, 3, 2, 1)

    .. error::

        >>> permshatter.monotone_family(5, 3)
        ValueError: 't' must be 1 or 2
    """
    if not isinstance(t, int) or isinstance(t, bool):
        raise TypeError("'t' must be 'int'")
    if t not in (1, 2):
        raise ValueError("'t' must be 1 or 2")
    members = [Permutation.identity(n)]
    if t == 2:
        members.append(Permutation.reversal(n))
    return PermFamily(members, n=n)
