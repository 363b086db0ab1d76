import pytest

import permshatter


def test_OrderedPair_01():
    family = permshatter.monotone_family(8, 2)
    pair = permshatter.OrderedPair(family, [1, 2], [7, 8])
    assert pair.direction == (1, 0)
    assert pair.color == '10'
    assert pair.min_size == 2
    assert repr(pair) == 'OrderedPair(A=(1, 2), B=(7, 8))'


def test_OrderedPair_02():
    family = permshatter.PermFamily.from_orders([(3, 4, 1, 2), (1, 2, 3, 4)])
    pair = permshatter.OrderedPair(family, [4, 3], [2, 1])
    assert (pair.A, pair.B) == ((3, 4), (1, 2))
    assert pair.direction == (1, 0)
    assert pair.min_size == 2


def test_OrderedPair_03():
    family = permshatter.monotone_family(8, 2)
    pair = permshatter.OrderedPair(family, [], [3])
    assert pair.direction == (1, 1)
    assert pair.min_size == 0


def test_OrderedPair_04():
    family = permshatter.monotone_family(8, 2)
    with pytest.raises(ValueError):
        permshatter.OrderedPair(family, [1, 5], [3])
    with pytest.raises(ValueError):
        permshatter.OrderedPair(family, [1, 2], [2, 3])
    with pytest.raises(ValueError):
        permshatter.OrderedPair(family, [1, 1], [3])
    with pytest.raises(ValueError):
        permshatter.OrderedPair(family, [1], [9])
    with pytest.raises(TypeError):
        permshatter.OrderedPair([1, 2], [1], [2])
