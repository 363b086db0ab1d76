from typing import Optional

from ...core.LexPermutation import LexPermutation
from ...core.Pattern import Pattern
from .induced_pattern import induced_pattern
from .slice_decompose import slice_decompose


def slice_permutation(rho: LexPermutation, points) -> Optional[Pattern]:
    r"""Returns the pattern the component of ``rho`` at the slice position of
    ``points`` induces on their slice, or ``None`` for a singleton.

    Two lex-permutations induce the same pattern on a set exactly when their
    slice permutations agree on all of its subsets.

    Basic usage:
        >>> rho = permshatter.LexPermutation([
        ...     permshatter.Permutation.identity(3),
        ...     permshatter.Permutation.reversal(3),
        ... ])
        >>> permshatter.slice_permutation(rho, [(1, 1), (1, 3)])
        Pattern((2, 1))
    """
    if not isinstance(rho, LexPermutation):
        raise TypeError("'rho' must be 'LexPermutation'")
    decomposition = slice_decompose(points)
    if decomposition.spos is None:
        return None
    if len(decomposition.points[0]) != rho.d:
        raise ValueError(f'points must have {rho.d} coordinates')
    component = rho.components[decomposition.spos - 1]
    return induced_pattern(component, decomposition.slice)
