def check_subdivision(tree, subdivision) -> bool:
    r"""Independently checks a subdivision of a coloured tree: the images are
    distinct tree vertices, each non-root image lies strictly below the
    image of its parent, the two children of a vertex land in different
    subtrees below its image, and the images on every internal layer share
    one colour.

    Basic usage:
        >>> tree = permshatter.ColoredTree(2, ['a', 'a', 'b', 'a', 'a', 'b',
        ...                                    'b'])
        >>> permshatter.check_subdivision(
        ...     tree, permshatter.Subdivision(tree, [1, 4, 6]),
        ... )
        True

        The images on layer 1 below would have colours ``'a'`` and ``'b'``:

        >>> permshatter.check_subdivision(
        ...     tree,
        ...     permshatter.Subdivision(tree, [1, 2, 3, 4, 5, 6, 7]),
        ... )
        False
    """
    images = subdivision.images
    count = len(images)
    height = (count + 1).bit_length() - 2
    if count != 2 ** (height + 1) - 1:
        return False
    if len(set(images)) != count:
        return False
    if any(not 1 <= image <= tree.vertex_count for image in images):
        return False
    for vertex in range(2, count + 1):
        parent = images[vertex // 2 - 1]
        walker = images[vertex - 1]
        if walker == parent:
            return False
        while walker > parent:
            walker //= 2
        if walker != parent:
            return False
    for vertex in range(1, 2 ** height):
        left = images[2 * vertex - 1]
        right = images[2 * vertex]
        if tree.lowest_common_ancestor(left, right) != images[vertex - 1]:
            return False
    for depth in range(height):
        layer = images[2 ** depth - 1:2 ** (depth + 1) - 1]
        if len({tree.color(image) for image in layer}) != 1:
            return False
    return True
