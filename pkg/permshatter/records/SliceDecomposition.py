from typing import Optional


class SliceDecomposition():
    r"""The partition of a point set by its values at the first coordinate
    where its points differ.

    :attr:`spos` is that coordinate, :attr:`slice` the sorted tuple of values
    the points take there, and :attr:`parts` maps each of these values to the
    points holding it. A singleton has no such coordinate: :attr:`spos` is
    then ``None``, :attr:`slice` is empty and :attr:`parts` is empty.

    Basic usage:
        >>> decomposition = permshatter.slice_decompose(
        ...     [(1, 1), (1, 2), (2, 1)]
        ... )
        >>> decomposition.spos
        1
        >>> decomposition.slice
        (1, 2)
        >>> decomposition.parts
        {1: ((1, 1), (1, 2)), 2: ((2, 1),)}
    """

    ### CLASS VARIABLES ###

    __slots__ = ('_points',
                 '_spos',
                 '_parts',
                 )

    ### INITIALISER ###

    def __init__(self,
                 points: tuple,
                 spos: Optional[int],
                 parts: dict,
                 ) -> None:
        r'Initialises self.'
        if spos is None:
            if len(points) != 1 or len(parts) != 0:
                raise ValueError('only a singleton has no slice position')
        else:
            if not isinstance(spos, int) or spos < 1:
                raise ValueError("'spos' must be a positive 'int' or None")
            if len(parts) < 2:
                raise ValueError('a defined slice position needs at least '
                                 'two slice values')
            if sum(len(part) for part in parts.values()) != len(points):
                raise ValueError("'parts' must partition 'points'")
        self._points = tuple(points)
        self._spos = spos
        self._parts = {value: tuple(parts[value]) for value in sorted(parts)}

    ### SPECIAL METHODS ###

    def __repr__(self) -> str:
        return (f'{type(self).__name__}(spos={self._spos}, '
                f'slice={self.slice})')

    def __len__(self) -> int:
        r'Number of points decomposed.'
        return len(self._points)

    ### PUBLIC PROPERTIES ###

    @property
    def points(self) -> tuple:
        r'The decomposed points in standard lex order.'
        return self._points

    @property
    def spos(self) -> Optional[int]:
        r'First coordinate where the points differ, ``None`` if singleton.'
        return self._spos

    @property
    def slice(self) -> tuple:
        r'Values taken at :attr:`spos`, sorted.'
        return tuple(self._parts)

    @property
    def parts(self) -> dict:
        r'Points grouped by their value at :attr:`spos`.'
        return dict(self._parts)
