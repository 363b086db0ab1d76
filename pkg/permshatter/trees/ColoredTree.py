from typing import Optional, Union


class ColoredTree():
    r"""A complete binary tree with a colour on every vertex, and optionally
    a fragment of the ground set and an :class:`OrderedPair` per vertex.

    Vertices are numbered in breadth-first order: the root is ``1`` and the
    children of ``v`` are ``2v`` and ``2v + 1``, so vertex ``v`` lies at depth
    ``v.bit_length() - 1`` and layer ``j`` is ``range(2**j, 2**(j + 1))``.

    Basic usage:
        >>> tree = permshatter.ColoredTree(1, ['0', '1', '1'])
        >>> tree.height, tree.vertex_count
        (1, 3)
        >>> tree.color(3)
        '1'
        >>> tree.distinct_colors
        {'0', '1'}

        Trees built from a family by :func:`build_ordered_tree` carry
        fragments and pairs too:

        >>> family = permshatter.monotone_family(16, 2)
        >>> tree = permshatter.build_ordered_tree(family, range(1, 17), 1,
        ...                                       best_effort=True)
        >>> tree.fragment(2), tree.fragment(3)
        ((1, 2, 3, 4, 5, 6, 7, 8), (9, 10, 11, 12, 13, 14, 15, 16))
    """

    ### CLASS VARIABLES ###

    __slots__ = ('_height',
                 '_colors',
                 '_fragments',
                 '_pairs',
                 )

    ### INITIALISER ###

    def __init__(self,
                 height: int,
                 colors: Union[list, tuple],
                 *,
                 fragments: Optional[Union[list, tuple]] = None,
                 pairs: Optional[Union[list, tuple]] = None,
                 ) -> None:
        r'Initialises self.'
        if not isinstance(height, int) or isinstance(height, bool):
            raise TypeError("'height' must be 'int'")
        if height < 0:
            raise ValueError("'height' must be a nonnegative 'int'")
        count = 2 ** (height + 1) - 1
        if not isinstance(colors, (list, tuple)):
            raise TypeError("'colors' must be 'list' or 'tuple'")
        if len(colors) != count:
            raise ValueError(f"'colors' must hold {count} colours, one per "
                             f"vertex in breadth-first order")
        for name, values in (('fragments', fragments), ('pairs', pairs)):
            if values is not None and len(values) != count:
                raise ValueError(f"'{name}' must hold {count} entries")
        if fragments is not None and any(len(fragment) == 0
                                         for fragment in fragments):
            raise ValueError('fragments must be nonempty')
        self._height = height
        self._colors = tuple(colors)
        self._fragments = None if fragments is None else tuple(fragments)
        self._pairs = None if pairs is None else tuple(pairs)

    ### SPECIAL METHODS ###

    def __repr__(self) -> str:
        return (f'{type(self).__name__}(height={self._height}, '
                f'colors={len(self.distinct_colors)})')

    def __len__(self) -> int:
        return len(self._colors)

    ### PUBLIC METHODS ###

    def color(self, vertex: int) -> object:
        r'Colour of a vertex.'
        return self._colors[self._index(vertex)]

    def fragment(self, vertex: int) -> tuple:
        r'Ground-set fragment of a vertex.'
        if self._fragments is None:
            raise ValueError('tree carries no fragments')
        return self._fragments[self._index(vertex)]

    def pair(self, vertex: int) -> object:
        r'Ordered pair of a vertex.'
        if self._pairs is None:
            raise ValueError('tree carries no pairs')
        return self._pairs[self._index(vertex)]

    def layer(self, depth: int) -> range:
        r'Vertices at a given depth, left to right.'
        if not 0 <= depth <= self._height:
            raise ValueError(f"'depth' must lie between 0 and {self._height}")
        return range(2 ** depth, 2 ** (depth + 1))

    @staticmethod
    def depth(vertex: int) -> int:
        r'Depth of a vertex.'
        return vertex.bit_length() - 1

    @staticmethod
    def is_ancestor(ancestor: int, vertex: int) -> bool:
        r'Whether ``ancestor`` is ``vertex`` or lies above it.'
        while vertex > ancestor:
            vertex //= 2
        return vertex == ancestor

    @staticmethod
    def lowest_common_ancestor(u: int, v: int) -> int:
        r'Lowest common ancestor of two vertices.'
        while u.bit_length() > v.bit_length():
            u //= 2
        while v.bit_length() > u.bit_length():
            v //= 2
        while u != v:
            u //= 2
            v //= 2
        return u

    def to_dict(self) -> dict:
        r"""Dumps per-vertex fragment sizes and colours, in breadth-first
        order.
        """
        vertices = []
        for vertex in range(1, len(self._colors) + 1):
            entry = {'vertex': vertex,
                     'depth': self.depth(vertex),
                     'color': self._colors[vertex - 1],
                     }
            if self._fragments is not None:
                entry['fragment_size'] = len(self._fragments[vertex - 1])
            vertices.append(entry)
        return {'height': self._height, 'vertices': vertices}

    ### PRIVATE METHODS ###

    def _index(self, vertex: int) -> int:
        if not isinstance(vertex, int) or not 1 <= vertex <= len(self._colors):
            raise ValueError(f"'vertex' must lie between 1 and "
                             f"{len(self._colors)}")
        return vertex - 1

    ### PUBLIC PROPERTIES ###

    @property
    def height(self) -> int:
        return self._height

    @property
    def vertex_count(self) -> int:
        return len(self._colors)

    @property
    def colors(self) -> tuple:
        r'Vertex colours in breadth-first order.'
        return self._colors

    @property
    def distinct_colors(self) -> set:
        r'The colours present in the tree.'
        return set(self._colors)

    @property
    def fragments(self) -> Optional[tuple]:
        return self._fragments

    @property
    def pairs(self) -> Optional[tuple]:
        return self._pairs
