import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import permshatter


def test_slice_permutation_01():
    rho = permshatter.LexPermutation([
        permshatter.Permutation.identity(3),
        permshatter.Permutation.reversal(3),
    ])
    assert permshatter.slice_permutation(rho, [(1, 1), (1, 3)]) == (
        permshatter.Pattern((2, 1))
    )
    assert permshatter.slice_permutation(rho, [(3, 1), (1, 3)]) == (
        permshatter.Pattern((1, 2))
    )
    assert permshatter.slice_permutation(rho, [(2, 2)]) is None


def test_slice_permutation_02():
    rho = permshatter.LexPermutation.identity(3, 2)
    with pytest.raises(ValueError):
        permshatter.slice_permutation(rho, [(1, 1, 1), (1, 1, 2)])
    with pytest.raises(TypeError):
        permshatter.slice_permutation(permshatter.Permutation.identity(3),
                                      [(1, 1), (1, 2)],
                                      )


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6),
       st.sets(st.tuples(st.integers(1, 3), st.integers(1, 3)),
               min_size=2,
               max_size=5,
               ))
def test_slice_permutation_03(seed, points):
    rng = np.random.default_rng(seed)
    first = permshatter.LexPermutation.random(3, 2, rng)
    second = permshatter.LexPermutation.random(3, 2, rng)
    points = sorted(points)
    same_pattern = first.materialize(points) == second.materialize(points)
    same_slices = all(
        permshatter.slice_permutation(first, list(subset))
        == permshatter.slice_permutation(second, list(subset))
        for size in range(2, len(points) + 1)
        for subset in itertools.combinations(points, size)
    )
    assert same_pattern == same_slices


def test_slice_permutation_04():
    rng = np.random.default_rng(31)
    for trial in range(10_000):
        b, d = ((2, 2), (3, 2), (2, 3), (3, 3))[trial % 4]
        size = int(rng.integers(2, min(5, b ** d) + 1))
        elements = rng.choice(b ** d, size=size, replace=False) + 1
        points = sorted(permshatter.encode(b ** d, b, d, int(element))
                        for element in elements)
        first = permshatter.LexPermutation.random(b, d, rng)
        second = permshatter.LexPermutation.random(b, d, rng)
        same_pattern = (first.materialize(points)
                        == second.materialize(points))
        same_slices = all(
            permshatter.slice_permutation(first, list(subset))
            == permshatter.slice_permutation(second, list(subset))
            for count in range(2, size + 1)
            for subset in itertools.combinations(points, count)
        )
        assert same_pattern == same_slices
