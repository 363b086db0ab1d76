import logging
from typing import Optional

from ...core._patterns import ceil_log2
from ...core._points import validate_points
from ...core.CubeFamily import CubeFamily
from ...exceptions import StructuralAnomalyError
from ...records.StructureReport import StructureReport
from ..constructions.encode import decode
from .count_induced import count_induced
from .rigid_quadruple import rigid_quadruple
from .slice_profile import slice_profile

logger = logging.getLogger(__name__)


def structure_analysis(points,
                       k: int,
                       *,
                       family: Optional[CubeFamily] = None,
                       ) -> StructureReport:
    r"""Classifies a k-set of points by how many patterns any k-lex-shattering
    family must induce on it.

    With ``h = ceil(log2 k)``, the verdict is ``'guaranteed_2k'`` when
    ``prod s_i! >= 2k`` (reason ``'product'``), some slice has three values or
    more (``'large-slice'``), there are more than ``h`` index positions
    (``'many-positions'``), or two groups at the same position carry different
    slice pairs (``'split-slices'``). Otherwise the set is ``'rigid'``: one
    two-value slice per position, exactly ``h`` positions.

    Basic usage:
        >>> report = permshatter.structure_analysis(
        ...     [(1, 1), (1, 2), (2, 1), (2, 2)], 4,
        ... )
        >>> report.verdict, report.h
        ('rigid', 2)
        >>> report = permshatter.structure_analysis(
        ...     [(1, 1), (2, 1), (3, 1), (3, 2)], 4,
        ... )
        >>> report.verdict, report.reason
        ('guaranteed_2k', 'product')

    ``family``:
        A :class:`CubeFamily` over the same cube to check the verdict
        against: the induced count on the points is recorded, and a count
        below ``2k`` on a ``'guaranteed_2k'`` set or below ``2^h`` on a rigid
        set raises :exc:`StructuralAnomalyError`, which means the family is
        not k-lex-shattering.

    .. error::

        The set must have exactly ``k`` points:

        >>> permshatter.structure_analysis([(1, 1), (1, 2)], 3)
        ValueError: 'points' must contain exactly 3 points
    """
    if not isinstance(k, int) or isinstance(k, bool):
        raise TypeError("'k' must be 'int'")
    if k < 2:
        raise ValueError("'k' must be at least 2")
    points = validate_points(points)
    if len(points) != k:
        raise ValueError(f"'points' must contain exactly {k} points")
    report = slice_profile(points)
    h = ceil_log2(k)
    sizes = report.slice_sizes
    rigid_slices = None
    quadruple = None
    if report.product_bound >= 2 * k:
        verdict, reason = 'guaranteed_2k', 'product'
    elif any(size >= 3 for size in sizes.values()):
        verdict, reason = 'guaranteed_2k', 'large-slice'
    elif len(report.index_set) > h:
        verdict, reason = 'guaranteed_2k', 'many-positions'
    else:
        pairs = _slice_pairs(points, report.index_set)
        if any(len(found) > 1 for found in pairs.values()):
            verdict, reason = 'guaranteed_2k', 'split-slices'
        else:
            verdict, reason = 'rigid', 'rigid'
            rigid_slices = {i: next(iter(found))
                            for i, found in pairs.items()}
            if k >= 4:
                quadruple = rigid_quadruple(points)
    induced = None
    if family is not None:
        induced = _induced_count(family, points)
        floor = 2 * k if verdict == 'guaranteed_2k' else 2 ** h
        if induced < floor:
            raise StructuralAnomalyError(
                f'family induces {induced} patterns on a {verdict} set '
                f'(reason {reason!r}), below {floor}'
            )
    logger.debug('structure of %s: %s (%s)', points, verdict, reason)
    return report.with_verdict(h=h,
                               verdict=verdict,
                               reason=reason,
                               rigid_slices=rigid_slices,
                               quadruple=quadruple,
                               induced_count=induced,
                               )


def _slice_pairs(points: tuple, positions: tuple) -> dict:
    pairs = {}
    for i in positions:
        groups = {}
        for point in points:
            groups.setdefault(point[:i - 1], set()).add(point[i - 1])
        pairs[i] = {tuple(sorted(values)) for values in groups.values()
                    if len(values) >= 2}
    return pairs


def _induced_count(family: CubeFamily, points: tuple) -> int:
    if not isinstance(family, CubeFamily):
        raise TypeError("'family' must be 'CubeFamily'")
    if len(points[0]) != family.d:
        raise ValueError(f'points must have {family.d} coordinates')
    elements = [decode(family.n, family.b, family.d, point)
                for point in points]
    return count_induced(family, elements)
