import numpy as np

from ...core.CubeFamily import CubeFamily
from ...core.LexPermutation import LexPermutation
from ...core.PermFamily import PermFamily


def scrambling_to_lex(family: PermFamily, b: int, d: int) -> CubeFamily:
    r"""Turns a family of permutations of ``[b * d]`` into a family of
    lex-permutations of ``[b]^d``: component ``i`` of the image of ``tau`` is
    the pattern ``tau`` induces on the block ``(i - 1) * b + 1, ..., i * b``.
    The image is k-lex-shattering whenever the input shatters every
    ``k**2``-subset of ``[b * d]``.

    Basic usage:
        >>> family = permshatter.PermFamily(
        ...     [permshatter.Permutation.reversal(4)]
        ... )
        >>> lex = permshatter.scrambling_to_lex(family, 2, 2)
        >>> lex[0].to_list()
        [[2, 1], [2, 1]]

    .. error::

        >>> permshatter.scrambling_to_lex(family, 2, 3)
        ValueError: 'family' must be a family of permutations of [6]
    """
    if not isinstance(family, PermFamily):
        raise TypeError("'family' must be 'PermFamily'")
    for name, value in (('b', b), ('d', d)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"'{name}' must be 'int'")
        if value < 1:
            raise ValueError(f"'{name}' must be a positive 'int'")
    if family.n != b * d:
        raise ValueError(f"'family' must be a family of permutations of "
                         f"[{b * d}]")
    blocks = family.rank_matrix.reshape(len(family), d, b)
    tables = np.argsort(np.argsort(blocks, axis=2), axis=2)
    members = [LexPermutation.from_table(table) for table in tables]
    return CubeFamily(members, b=b, d=d)
