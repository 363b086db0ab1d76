import pytest

import permshatter


def test_monotone_family_01():
    family = permshatter.monotone_family(5, 1)
    assert len(family) == 1
    assert family[0] == permshatter.Permutation.identity(5)


def test_monotone_family_02():
    family = permshatter.monotone_family(5, 2)
    assert len(family) == 2
    assert family[1].rank == (5, 4, 3, 2, 1)
    assert permshatter.min_shatter(family, 5) == (2, (1, 2, 3, 4, 5))


def test_monotone_family_03():
    with pytest.raises(ValueError):
        permshatter.monotone_family(5, 3)
    with pytest.raises(TypeError):
        permshatter.monotone_family(5, 2.0)
    with pytest.raises(ValueError):
        permshatter.monotone_family(0, 1)
