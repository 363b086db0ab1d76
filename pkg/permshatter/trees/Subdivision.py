from typing import Union

from ..utilities.adversaries.check_subdivision import check_subdivision
from .ColoredTree import ColoredTree


class Subdivision():
    r"""An embedding of the complete binary tree ``S`` of height ``h`` into a
    :class:`ColoredTree`: ``images[s - 1]`` is the tree vertex that vertex
    ``s`` of ``S`` (breadth-first numbering) is mapped to. Each image lies
    strictly below the image of its parent, and all images on an internal
    layer of ``S`` share one colour.

    Basic usage:
        >>> tree = permshatter.ColoredTree(2, ['a'] * 7)
        >>> subdivision = permshatter.Subdivision(tree, [1, 2, 3])
        >>> subdivision.height, subdivision.leaves
        (1, (2, 3))
        >>> subdivision.is_valid()
        True
        >>> subdivision.layer_colors
        ('a',)
    """

    ### CLASS VARIABLES ###

    __slots__ = ('_tree',
                 '_images',
                 )

    ### INITIALISER ###

    def __init__(self,
                 tree: ColoredTree,
                 images: Union[list, tuple],
                 ) -> None:
        r'Initialises self.'
        if not isinstance(tree, ColoredTree):
            raise TypeError("'tree' must be 'ColoredTree'")
        if not isinstance(images, (list, tuple)):
            raise TypeError("'images' must be 'list' or 'tuple'")
        count = len(images) + 1
        if count & (count - 1) != 0 or len(images) == 0:
            raise ValueError("'images' must hold 2**(h + 1) - 1 vertices")
        self._tree = tree
        self._images = tuple(int(image) for image in images)

    ### SPECIAL METHODS ###

    def __repr__(self) -> str:
        return f'{type(self).__name__}(height={self.height})'

    ### PUBLIC METHODS ###

    def image(self, vertex: int) -> int:
        r'Tree vertex that a vertex of ``S`` is mapped to.'
        return self._images[vertex - 1]

    def is_valid(self) -> bool:
        r'Re-checks the subdivision with :func:`check_subdivision`.'
        return check_subdivision(self._tree, self)

    ### PUBLIC PROPERTIES ###

    @property
    def tree(self) -> ColoredTree:
        return self._tree

    @property
    def images(self) -> tuple:
        r'Images of the vertices of ``S`` in breadth-first order.'
        return self._images

    @property
    def height(self) -> int:
        return (len(self._images) + 1).bit_length() - 2

    @property
    def leaves(self) -> tuple:
        r'Images of the leaves of ``S``, left to right.'
        h = self.height
        return self._images[2 ** h - 1:]

    @property
    def layer_colors(self) -> tuple:
        r'The colour of every internal layer of ``S``, root first.'
        return tuple(self._tree.color(self._images[2 ** j - 1])
                     for j in range(self.height))
