import math
from typing import Optional


class StructureReport():
    r"""Slice structure of a point set ``X``: its index set, the largest
    slice size ``s_i`` reached at every index position, and, once a subset
    size ``k`` is known, a verdict on how strongly a k-lex-shattering family
    must shatter ``X``.

    :func:`permshatter.slice_profile` fills in everything but the verdict;
    :func:`permshatter.structure_analysis` adds it.

    Verdicts:
        ``'guaranteed_2k'``
            every k-lex-shattering family induces at least ``2k`` patterns on
            ``X``. :attr:`reason` names the case: ``'product'``,
            ``'large-slice'``, ``'many-positions'`` or ``'split-slices'``.

        ``'rigid'``
            all slices have two values, there are exactly ``h = ceil(log2 k)``
            index positions and every position carries one slice pair
            (:attr:`rigid_slices`). Such families may induce as few as
            ``2^h`` patterns.

    Basic usage:
        >>> report = permshatter.structure_analysis(
        ...     [(1, 1), (1, 2), (2, 1), (2, 2)], 4,
        ... )
        >>> report.verdict
        'rigid'
        >>> report.rigid_slices
        {1: (1, 2), 2: (1, 2)}
    """

    ### CLASS VARIABLES ###

    __slots__ = ('_points',
                 '_index_set',
                 '_slice_sizes',
                 '_slice_witnesses',
                 '_greedy_witnesses',
                 '_h',
                 '_verdict',
                 '_reason',
                 '_rigid_slices',
                 '_quadruple',
                 '_induced_count',
                 )

    VERDICTS = (None, 'guaranteed_2k', 'rigid')

    ### INITIALISER ###

    def __init__(self,
                 *,
                 points: tuple,
                 index_set: tuple,
                 slice_sizes: dict,
                 slice_witnesses: dict,
                 greedy_witnesses: dict,
                 h: Optional[int] = None,
                 verdict: Optional[str] = None,
                 reason: Optional[str] = None,
                 rigid_slices: Optional[dict] = None,
                 quadruple: Optional[tuple] = None,
                 induced_count: Optional[int] = None,
                 ) -> None:
        r'Initialises self.'
        if verdict not in self.VERDICTS:
            raise ValueError("'verdict' must be 'guaranteed_2k', 'rigid' or "
                             "None")
        if set(slice_sizes) != set(index_set):
            raise ValueError("'slice_sizes' must be keyed by 'index_set'")
        if len(index_set) > len(points) - 1:
            raise ValueError("'index_set' cannot exceed |X| - 1 positions")
        if verdict == 'rigid':
            if any(size != 2 for size in slice_sizes.values()):
                raise ValueError('a rigid verdict needs all slices of size 2')
            if len(index_set) != h:
                raise ValueError('a rigid verdict needs exactly h positions')
        self._points = tuple(points)
        self._index_set = tuple(index_set)
        self._slice_sizes = dict(slice_sizes)
        self._slice_witnesses = dict(slice_witnesses)
        self._greedy_witnesses = dict(greedy_witnesses)
        self._h = h
        self._verdict = verdict
        self._reason = reason
        self._rigid_slices = rigid_slices
        self._quadruple = quadruple
        self._induced_count = induced_count

    ### SPECIAL METHODS ###

    def __repr__(self) -> str:
        return (f'{type(self).__name__}(index_set={self._index_set}, '
                f'slice_sizes={self._slice_sizes}, '
                f'verdict={self._verdict!r})')

    ### PUBLIC METHODS ###

    def with_verdict(self,
                     *,
                     h: int,
                     verdict: str,
                     reason: str,
                     rigid_slices: Optional[dict] = None,
                     quadruple: Optional[tuple] = None,
                     induced_count: Optional[int] = None,
                     ) -> 'StructureReport':
        r'A copy of the report carrying a verdict.'
        return StructureReport(points=self._points,
                               index_set=self._index_set,
                               slice_sizes=self._slice_sizes,
                               slice_witnesses=self._slice_witnesses,
                               greedy_witnesses=self._greedy_witnesses,
                               h=h,
                               verdict=verdict,
                               reason=reason,
                               rigid_slices=rigid_slices,
                               quadruple=quadruple,
                               induced_count=induced_count,
                               )

    def to_dict(self) -> dict:
        return {'points': [list(point) for point in self._points],
                'index_set': list(self._index_set),
                'slice_sizes': {str(i): s
                                for i, s in self._slice_sizes.items()},
                'greedy_product': self.greedy_product,
                'product_bound': self.product_bound,
                'h': self._h,
                'verdict': self._verdict,
                'reason': self._reason,
                'rigid_slices': (
                    None if self._rigid_slices is None
                    else {str(i): list(pair)
                          for i, pair in self._rigid_slices.items()}
                ),
                'induced_count': self._induced_count,
                }

    ### PUBLIC PROPERTIES ###

    @property
    def points(self) -> tuple:
        r'The analysed points in standard lex order.'
        return self._points

    @property
    def index_set(self) -> tuple:
        r'Slice positions of all subsets with at least two points, sorted.'
        return self._index_set

    @property
    def slice_sizes(self) -> dict:
        r'Largest slice size ``s_i`` per index position.'
        return dict(self._slice_sizes)

    @property
    def slice_witnesses(self) -> dict:
        r'A subset reaching ``s_i`` at position ``i``, per index position.'
        return dict(self._slice_witnesses)

    @property
    def greedy_witnesses(self) -> dict:
        r"""The subsets picked by the greedy descent: at each index position
        ``i`` a subset whose slice position is ``i``.
        """
        return dict(self._greedy_witnesses)

    @property
    def greedy_product(self) -> int:
        r'Product of the slice sizes of :attr:`greedy_witnesses`.'
        product = 1
        for subset in self._greedy_witnesses.values():
            product *= _slice_size(subset)
        return product

    @property
    def product_bound(self) -> int:
        r'``prod s_i!`` over the index set.'
        product = 1
        for size in self._slice_sizes.values():
            product *= math.factorial(size)
        return product

    @property
    def h(self) -> Optional[int]:
        return self._h

    @property
    def verdict(self) -> Optional[str]:
        return self._verdict

    @property
    def reason(self) -> Optional[str]:
        return self._reason

    @property
    def rigid_slices(self) -> Optional[dict]:
        r'The two-value slice at every index position of a rigid set.'
        return None if self._rigid_slices is None else dict(self._rigid_slices)

    @property
    def quadruple(self) -> Optional[tuple]:
        r"""For rigid sets with ``k >= 4``: four points and a position ``i``
        such that the π-permutations sorting by ``i`` shatter them fourfold.
        """
        return self._quadruple

    @property
    def induced_count(self) -> Optional[int]:
        r'Patterns induced by the family the analysis was checked against.'
        return self._induced_count


def _slice_size(subset: tuple) -> int:
    for coordinates in zip(*subset):
        values = set(coordinates)
        if len(values) > 1:
            return len(values)
    return 1
