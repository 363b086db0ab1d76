import pytest

import permshatter


def test_PermFamily_01():
    family = permshatter.PermFamily([
        permshatter.Permutation.identity(5),
        permshatter.Permutation.reversal(5),
    ])
    assert family.n == 5
    assert len(family) == 2
    assert family.size == 2
    assert family[1].rank == (5, 4, 3, 2, 1)
    assert repr(family) == 'PermFamily(n=5, size=2)'


def test_PermFamily_02():
    family = permshatter.PermFamily.from_orders(
        [(1, 2, 3, 4), (4, 3, 2, 1), (2, 1, 4, 3)]
    )
    assert family.to_dict() == {
        'n': 4,
        'perms': [[1, 2, 3, 4], [4, 3, 2, 1], [2, 1, 4, 3]],
    }
    assert permshatter.PermFamily.from_dict(family.to_dict()) == family


def test_PermFamily_03(tmp_path):
    family = permshatter.PermFamily.random(8, 3, seed=2)
    path = str(tmp_path / 'family.json')
    family.write(path)
    assert permshatter.PermFamily.read(path) == family
    assert family == permshatter.PermFamily.random(8, 3, seed=2)
    assert family != permshatter.PermFamily.random(8, 3, seed=5)


def test_PermFamily_04():
    family = permshatter.PermFamily([], n=8)
    assert family.n == 8
    assert len(family) == 0
    assert family.keys([[1, 2]]).shape == (0, 1, 2)


def test_PermFamily_05():
    family = permshatter.PermFamily.random(6, 3, seed=0)
    keys = family.keys([[1, 2], [5, 6]])
    assert keys.shape == (3, 2, 2)
    assert keys[1, 1, 0] == family[1].rank[4]
    matrix = family.rank_matrix
    matrix[0, 0] = 0
    assert family.rank_matrix[0, 0] != 0


def test_PermFamily_06():
    once = permshatter.monotone_family(5, 1)
    twice = once + once
    assert len(twice) == 2
    assert twice[0] == twice[1]
    with pytest.raises(ValueError):
        once + permshatter.monotone_family(6, 1)


def test_PermFamily_07():
    with pytest.raises(ValueError):
        permshatter.PermFamily([])
    with pytest.raises(ValueError):
        permshatter.PermFamily([
            permshatter.Permutation.identity(3),
            permshatter.Permutation.identity(4),
        ])
    with pytest.raises(TypeError):
        permshatter.PermFamily([1, 2])
    with pytest.raises(ValueError):
        permshatter.PermFamily.from_dict({'n': 3})
    with pytest.raises(ValueError):
        permshatter.monotone_family(4, 1).keys([[0, 1]])
    with pytest.raises(ValueError):
        permshatter.monotone_family(4, 1).keys([1, 2])
