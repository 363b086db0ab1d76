import math

import pytest

import permshatter


def test_lower_bound_thresholds_01():
    chain, tree = permshatter.lower_bound_thresholds(4096, 4)
    assert chain == 2.0
    assert tree == pytest.approx(math.sqrt(12) / 2 - 1)


def test_lower_bound_thresholds_02():
    _, tree = permshatter.lower_bound_thresholds(256, 4)
    assert round(tree, 3) == 0.414
    assert permshatter.lower_bound_thresholds(2, 3)[0] < 0


def test_lower_bound_thresholds_03():
    with pytest.raises(ValueError):
        permshatter.lower_bound_thresholds(1, 3)
    with pytest.raises(ValueError):
        permshatter.lower_bound_thresholds(16, 2)
    with pytest.raises(TypeError):
        permshatter.lower_bound_thresholds(16.0, 3)
