import pytest

import permshatter


def test_ColoredTree_01():
    tree = permshatter.ColoredTree(1, ['0', '1', '1'])
    assert (tree.height, tree.vertex_count) == (1, 3)
    assert len(tree) == 3
    assert tree.color(3) == '1'
    assert tree.distinct_colors == {'0', '1'}
    assert tree.colors == ('0', '1', '1')
    assert tree.fragments is None


def test_ColoredTree_02():
    tree = permshatter.ColoredTree(3, ['c'] * 15)
    assert list(tree.layer(2)) == [4, 5, 6, 7]
    assert tree.depth(1) == 0
    assert tree.depth(13) == 3
    assert tree.is_ancestor(3, 13)
    assert tree.is_ancestor(6, 6)
    assert not tree.is_ancestor(2, 13)
    assert tree.lowest_common_ancestor(8, 11) == 2
    assert tree.lowest_common_ancestor(9, 3) == 1
    assert tree.lowest_common_ancestor(12, 6) == 6


def test_ColoredTree_03():
    family = permshatter.monotone_family(16, 2)
    tree = permshatter.build_ordered_tree(family,
                                          range(1, 17),
                                          1,
                                          best_effort=True,
                                          )
    assert tree.to_dict() == {
        'height': 1,
        'vertices': [
            {'vertex': 1, 'depth': 0, 'color': '10', 'fragment_size': 16},
            {'vertex': 2, 'depth': 1, 'color': '10', 'fragment_size': 8},
            {'vertex': 3, 'depth': 1, 'color': '10', 'fragment_size': 8},
        ],
    }
    assert permshatter.ColoredTree(0, ['a']).to_dict() == {
        'height': 0,
        'vertices': [{'vertex': 1, 'depth': 0, 'color': 'a'}],
    }


def test_ColoredTree_04():
    with pytest.raises(ValueError):
        permshatter.ColoredTree(1, ['0', '1'])
    with pytest.raises(ValueError):
        permshatter.ColoredTree(-1, [])
    with pytest.raises(ValueError):
        permshatter.ColoredTree(1, ['0'] * 3, fragments=[(1, ), (), (2, )])
    tree = permshatter.ColoredTree(1, ['0'] * 3)
    with pytest.raises(ValueError):
        tree.color(4)
    with pytest.raises(ValueError):
        tree.fragment(1)
    with pytest.raises(ValueError):
        tree.layer(2)
