from ...core._points import validate_points
from ...records.StructureReport import StructureReport
from .index_set import index_set
from .slice_decompose import slice_decompose


def slice_profile(points) -> StructureReport:
    r"""Computes, for every position ``i`` of the index set of ``points``,
    the largest slice ``s_i`` of a subset whose slice position is ``i``.
    Such subsets live inside one group of points sharing their first
    ``i - 1`` coordinates, so ``s_i`` is the largest number of distinct
    ``i``-th coordinates within a group.

    The report also carries the greedy witnesses: walking down from the
    whole set, at each slice position the descent keeps the largest part
    (the one with the least value on ties), and index positions the descent
    skips are covered by the maximising subsets. The product of their slice
    sizes is at least ``|X|``.

    Basic usage:
        >>> report = permshatter.slice_profile([(1, 1), (2, 1), (3, 1)])
        >>> report.index_set, report.slice_sizes
        ((1,), {1: 3})
        >>> report = permshatter.slice_profile(
        ...     [(1, 1), (1, 2), (2, 1), (2, 2)]
        ... )
        >>> report.slice_sizes, report.greedy_product
        ({1: 2, 2: 2}, 4)
    """
    points = validate_points(points, minimum=2)
    d = len(points[0])
    positions = index_set(points)
    slice_sizes = {}
    slice_witnesses = {}
    for i in positions:
        groups = {}
        for point in points:
            groups.setdefault(point[:i - 1], []).append(point)
        best = None
        for prefix in sorted(groups):
            group = groups[prefix]
            size = len({point[i - 1] for point in group})
            if size >= 2 and (best is None or size > best[0]):
                best = (size, tuple(group))
        slice_sizes[i] = best[0]
        slice_witnesses[i] = best[1]
    greedy_witnesses = {}
    remaining = points
    for j in range(1, d + 1):
        decomposition = (slice_decompose(remaining)
                         if len(remaining) >= 2 else None)
        if decomposition is not None and decomposition.spos == j:
            greedy_witnesses[j] = remaining
            parts = decomposition.parts
            largest = max(len(part) for part in parts.values())
            value = min(value for value, part in parts.items()
                        if len(part) == largest)
            remaining = parts[value]
        elif j in slice_sizes:
            greedy_witnesses[j] = slice_witnesses[j]
    return StructureReport(points=points,
                           index_set=positions,
                           slice_sizes=slice_sizes,
                           slice_witnesses=slice_witnesses,
                           greedy_witnesses=greedy_witnesses,
                           )
