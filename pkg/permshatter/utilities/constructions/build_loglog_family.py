import logging
from typing import Optional

from ...core._patterns import ceil_log2
from ...core.CubeFamily import CubeFamily
from .build_k_lex_random import build_k_lex_random

logger = logging.getLogger(__name__)


def build_loglog_family(n: int,
                        k: int,
                        seed: int = 0,
                        *,
                        allow_sampling: bool = True,
                        budget: Optional[int] = None,
                        samples: Optional[int] = None,
                        max_retries: Optional[int] = None,
                        ) -> CubeFamily:
    r"""Builds a family of permutations of ``[n]`` of size ``O(log log n)``
    that ``2^ceil(log2 k)``-shatters every k-subset.

    ``[n]`` is identified with the first ``n`` points of the binary cube
    ``[2]^d``, ``d = ceil(log2 n)``, and the family is a k-lex-shattering
    family of that cube from :func:`build_k_lex_random` (no weight cap).
    With ``b = 2`` the constraint count is ``C(d, k) * 2^k``, so the family
    is certified exhaustively up to ``n = 2^32`` and beyond.

    Basic usage:
        >>> family = permshatter.build_loglog_family(64, 4, seed=7)
        >>> family.b, family.d
        (2, 6)
        >>> permshatter.min_shatter(family, 4)[0] >= 4
        True

        The lex report certifies the family without any subset enumeration:

        >>> family = permshatter.build_loglog_family(2 ** 32, 4)
        >>> family.lex_report.mode, family.lex_report.passed
        ('exhaustive', True)
    """
    for name, value in (('n', n), ('k', k)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"'{name}' must be 'int'")
    if n < 2:
        raise ValueError("'n' must be at least 2")
    if k < 3:
        raise ValueError("'k' must be at least 3")
    d = max(1, ceil_log2(n))
    lex = build_k_lex_random(2,
                             d,
                             k,
                             seed,
                             allow_sampling=allow_sampling,
                             budget=budget,
                             samples=samples,
                             max_retries=max_retries,
                             )
    logger.info('log log family of [%d]: d=%d, %d members', n, d, len(lex))
    return lex.restrict(n)
