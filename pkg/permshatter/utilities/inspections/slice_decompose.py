from ...core._points import validate_points
from ...records.SliceDecomposition import SliceDecomposition


def slice_decompose(points) -> SliceDecomposition:
    r"""Splits a set of points of ``[b]^d`` by their values at the first
    coordinate where they differ.

    Basic usage:
        >>> decomposition = permshatter.slice_decompose([(1, 1), (1, 2)])
        >>> decomposition.spos, decomposition.slice
        (2, (1, 2))

        A singleton has no slice position:

        >>> permshatter.slice_decompose([(3, 1)]).spos is None
        True
    """
    points = validate_points(points)
    if len(points) == 1:
        return SliceDecomposition(points, None, {})
    for position, coordinates in enumerate(zip(*points), start=1):
        if len(set(coordinates)) > 1:
            parts = {}
            for point in points:
                parts.setdefault(point[position - 1], []).append(point)
            return SliceDecomposition(points, position, parts)
    raise ValueError("'points' must not contain duplicates")
