import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import permshatter


def test_ordered_pair_01():
    family = permshatter.PermFamily([], n=8)
    pair = permshatter.ordered_pair(family, range(1, 9))
    assert (pair.A, pair.B) == ((1, 2, 3, 4), (5, 6, 7, 8))
    assert pair.direction == ()


def test_ordered_pair_02():
    family = permshatter.monotone_family(16, 2)
    pair = permshatter.ordered_pair(family, range(1, 17))
    assert pair.A == tuple(range(1, 9))
    assert pair.B == tuple(range(9, 17))
    assert pair.color == '10'


def test_ordered_pair_03():
    family = permshatter.monotone_family(8, 2)
    with pytest.raises(permshatter.InsufficientGroundSetError):
        permshatter.ordered_pair(family, [1, 2, 3, 4, 5])
    pair = permshatter.ordered_pair(family, [1, 2, 3, 4, 5], best_effort=True)
    assert (pair.A, pair.B) == ((1, 2), (3, 4))
    assert pair.direction == (1, 0)


def test_ordered_pair_04():
    family = permshatter.PermFamily.random(16, 2, seed=4)
    pair = permshatter.inspect(family).ordered_pair(range(1, 17))
    assert pair.min_size >= 2
    assert len(pair.A) == len(pair.B)


def test_ordered_pair_05():
    family = permshatter.build_loglog_family(64, 3, seed=1)
    pair = permshatter.ordered_pair(family, range(1, 65), best_effort=True)
    assert set(pair.A).isdisjoint(pair.B)
    assert len(pair.direction) == len(family)


def test_ordered_pair_06():
    family = permshatter.monotone_family(8, 1)
    with pytest.raises(permshatter.InsufficientGroundSetError):
        permshatter.ordered_pair(family, [3], best_effort=True)
    with pytest.raises(permshatter.PreconditionError):
        permshatter.ordered_pair(family, [1, 2, 3])
    with pytest.raises(ValueError):
        permshatter.ordered_pair(family, [1, 2, 3])
    with pytest.raises(TypeError):
        permshatter.ordered_pair(family, range(1, 9), best_effort='yes')
    with pytest.raises(ValueError):
        permshatter.ordered_pair(family, [0, 1, 2, 3])


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=3),
       st.integers(min_value=0, max_value=10 ** 6),
       st.integers(min_value=16, max_value=80),
       )
def test_ordered_pair_07(m, seed, size):
    family = permshatter.PermFamily.random(80, m, seed=seed)
    ground = range(81 - size, 81)
    pair = permshatter.ordered_pair(family, ground)
    assert len(pair.A) == len(pair.B)
    assert pair.min_size >= size // 2 ** (m + 1)
    assert set(pair.A) | set(pair.B) <= set(ground)
