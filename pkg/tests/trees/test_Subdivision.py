import pytest

import permshatter


def test_Subdivision_01():
    tree = permshatter.ColoredTree(2, ['a'] * 7)
    subdivision = permshatter.Subdivision(tree, [1, 2, 3])
    assert (subdivision.height, subdivision.leaves) == (1, (2, 3))
    assert subdivision.is_valid()
    assert subdivision.layer_colors == ('a', )
    assert subdivision.image(3) == 3
    assert subdivision.tree is tree


def test_Subdivision_02():
    tree = permshatter.ColoredTree(2, ['a', 'b', 'b', 'a', 'a', 'a', 'a'])
    subdivision = permshatter.Subdivision(tree, [1, 2, 3, 4, 5, 6, 7])
    assert subdivision.height == 2
    assert subdivision.layer_colors == ('a', 'b')
    assert subdivision.is_valid()
    assert repr(subdivision) == 'Subdivision(height=2)'


def test_Subdivision_03():
    tree = permshatter.ColoredTree(2, ['a'] * 7)
    with pytest.raises(ValueError):
        permshatter.Subdivision(tree, [1, 2])
    with pytest.raises(ValueError):
        permshatter.Subdivision(tree, [])
    with pytest.raises(TypeError):
        permshatter.Subdivision(['a'] * 7, [1])
