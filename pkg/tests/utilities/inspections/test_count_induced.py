import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import permshatter


def test_count_induced_01():
    family = permshatter.monotone_family(10, 2)
    assert permshatter.count_induced(family, [2, 5, 9]) == 2
    assert permshatter.count_induced(family, [7]) == 1


def test_count_induced_02():
    family = permshatter.PermFamily.from_orders(
        [(1, 2, 3, 4), (4, 3, 2, 1), (2, 1, 4, 3)]
    )
    assert permshatter.count_induced(family, [1, 2, 3, 4]) == 3
    assert permshatter.count_induced(family, {3, 4}) == 2
    assert permshatter.inspect(family).count_induced((1, 2)) == 2


def test_count_induced_03():
    family = permshatter.monotone_family(6, 2) + permshatter.monotone_family(
        6, 2
    )
    assert len(family) == 4
    assert permshatter.count_induced(family, range(1, 7)) == 2


def test_count_induced_04():
    family = permshatter.CubeFamily(
        permshatter.all_pis(2, 2),
        b=2,
        d=2,
    )
    assert permshatter.count_induced(family, [1, 2, 3, 4]) >= 4


def test_count_induced_05():
    with pytest.raises(ValueError):
        permshatter.count_induced(permshatter.PermFamily([], n=4), [1])
    family = permshatter.monotone_family(4, 1)
    with pytest.raises(ValueError):
        permshatter.count_induced(family, [1, 1])
    with pytest.raises(ValueError):
        permshatter.count_induced(family, [])
    with pytest.raises(ValueError):
        permshatter.count_induced(family, [5])
    with pytest.raises(TypeError):
        permshatter.count_induced([permshatter.Permutation.identity(4)], [1])


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6),
       st.integers(min_value=1, max_value=8),
       st.sets(st.integers(min_value=1, max_value=9), min_size=2),
       )
def test_count_induced_06(seed, size, subset):
    family = permshatter.PermFamily.random(9, size, seed=seed)
    count = permshatter.count_induced(family, subset)
    assert 1 <= count <= min(size, math.factorial(len(subset)))
    smaller = sorted(subset)[1:]
    assert permshatter.count_induced(family, smaller) <= count
