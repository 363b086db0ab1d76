import logging
from typing import Optional

from ...core._patterns import ceil_log2, ceil_sqrt
from ...core.CubeFamily import CubeFamily
from .build_k_lex_random import build_k_lex_random
from .build_pi import all_pis

logger = logging.getLogger(__name__)


def build_sqrtlog_family(n: int,
                         k: int,
                         seed: int = 0,
                         *,
                         allow_sampling: bool = True,
                         budget: Optional[int] = None,
                         samples: Optional[int] = None,
                         max_retries: Optional[int] = None,
                         ) -> CubeFamily:
    r"""Builds a family of permutations of ``[n]`` of size ``O(sqrt(log n))``
    that ``min(2k, 2^h + 4)``-shatters every k-subset, ``h = ceil(log2 k)``.

    ``[n]`` is identified with points of ``[b]^d`` for
    ``d = ceil(sqrt(ceil(log2 n)))`` and ``b = 2^d``. The family is a
    k-lex-shattering family ``P`` of that cube (groups of weight at most
    ``max(k - 1, h + 2)``) followed by the ``4d`` π-permutations, which sort
    by one coordinate in either direction and break ties by the lex order
    or its reverse.

    Basic usage:
        >>> family = permshatter.build_sqrtlog_family(16, 4, seed=0)
        >>> family.b, family.d
        (4, 2)
        >>> len(family) == len(family.lex_members) + 8
        True
        >>> permshatter.min_shatter(family, 4)[0] >= 8
        True
    """
    for name, value in (('n', n), ('k', k)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"'{name}' must be 'int'")
    if n < 2:
        raise ValueError("'n' must be at least 2")
    if k < 4:
        raise ValueError("'k' must be at least 4")
    h = ceil_log2(k)
    if not k - 1 > h:
        raise RuntimeError(f'k - 1 > ceil(log2 k) fails for k={k}')
    d = ceil_sqrt(ceil_log2(n))
    b = 2 ** d
    weight = max(k - 1, h + 2)
    lex = build_k_lex_random(b,
                             d,
                             k,
                             seed,
                             weight=weight,
                             allow_sampling=allow_sampling,
                             budget=budget,
                             samples=samples,
                             max_retries=max_retries,
                             )
    members = list(lex.lex_members) + all_pis(b, d)
    logger.info('sqrt log family of [%d]: b=%d, d=%d, %d + %d members', n, b,
                d, len(lex), 4 * d)
    return CubeFamily(members, b=b, d=d, n=n, lex_report=lex.lex_report)
