import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import permshatter


def test_first_diff_01():
    assert permshatter.first_diff((1, 2, 1), (1, 1, 2)) == 2
    assert permshatter.first_diff((2, 2), (1, 2)) == 1
    assert permshatter.first_diff([1, 1, 3], [1, 1, 2]) == 3


def test_first_diff_02():
    with pytest.raises(ValueError):
        permshatter.first_diff((1, 1), (1, 1))
    with pytest.raises(ValueError):
        permshatter.first_diff((1, 1), (1, 1, 1))
    with pytest.raises(TypeError):
        permshatter.first_diff('11', (1, 2))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 3),
                          st.integers(1, 3),
                          st.integers(1, 3),
                          st.integers(1, 3),
                          ),
                min_size=3,
                max_size=3,
                unique=True,
                ))
def test_first_diff_03(points):
    x, y, z = sorted(points)
    assert permshatter.first_diff(x, z) == min(permshatter.first_diff(x, y),
                                               permshatter.first_diff(y, z))
