import pytest

import permshatter


def test_build_ordered_tree_01():
    family = permshatter.PermFamily.random(256, 1, seed=3)
    tree = permshatter.build_ordered_tree(family, range(1, 257), 4)
    assert tree.height == 4
    assert tree.vertex_count == 31
    assert min(len(tree.fragment(v)) for v in tree.layer(4)) >= 1
    assert tree.distinct_colors <= {'0', '1'}


def test_build_ordered_tree_02():
    family = permshatter.PermFamily.random(256, 1, seed=3)
    tree = permshatter.build_ordered_tree(family, range(1, 257), 4)
    for vertex in range(1, 16):
        pair = tree.pair(vertex)
        assert tree.fragment(2 * vertex) == pair.A
        assert tree.fragment(2 * vertex + 1) == pair.B
        assert tree.color(vertex) == pair.color


def test_build_ordered_tree_03():
    family = permshatter.monotone_family(16, 2)
    tree = permshatter.build_ordered_tree(family,
                                          range(1, 17),
                                          1,
                                          best_effort=True,
                                          )
    assert tree.fragment(2) == (1, 2, 3, 4, 5, 6, 7, 8)
    assert tree.fragment(3) == (9, 10, 11, 12, 13, 14, 15, 16)
    assert tree.color(1) == '10'


def test_build_ordered_tree_04():
    family = permshatter.monotone_family(8, 1)
    tree = permshatter.build_ordered_tree(family, [2, 3], 1, best_effort=True)
    assert tree.fragment(2) == (2, )
    assert tree.fragment(3) == (3, )
    assert tree.pair(2).A == ()
    assert tree.color(2) == '1'


def test_build_ordered_tree_05():
    family = permshatter.PermFamily.random(256, 1, seed=3)
    with pytest.raises(permshatter.PreconditionError):
        permshatter.build_ordered_tree(family, range(1, 101), 4)
    family = permshatter.monotone_family(4, 2)
    with pytest.raises(permshatter.InsufficientGroundSetError):
        permshatter.build_ordered_tree(family,
                                       range(1, 5),
                                       3,
                                       best_effort=True,
                                       )
    with pytest.raises(ValueError):
        permshatter.build_ordered_tree(family, range(1, 5), -1)
