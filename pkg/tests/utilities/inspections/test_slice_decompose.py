import pytest

import permshatter


def test_slice_decompose_01():
    decomposition = permshatter.slice_decompose([(1, 1), (1, 2)])
    assert (decomposition.spos, decomposition.slice) == (2, (1, 2))
    assert len(decomposition) == 2


def test_slice_decompose_02():
    decomposition = permshatter.slice_decompose([(2, 1), (1, 2), (1, 1)])
    assert decomposition.spos == 1
    assert decomposition.slice == (1, 2)
    assert decomposition.parts == {1: ((1, 1), (1, 2)), 2: ((2, 1), )}
    assert decomposition.points == ((1, 1), (1, 2), (2, 1))


def test_slice_decompose_03():
    decomposition = permshatter.slice_decompose([(3, 1)])
    assert decomposition.spos is None
    assert decomposition.slice == ()
    assert decomposition.parts == {}


def test_slice_decompose_04():
    decomposition = permshatter.slice_decompose(
        [(1, 2, 1), (1, 2, 3), (1, 2, 2), (1, 2, 5)]
    )
    assert decomposition.spos == 3
    assert decomposition.slice == (1, 2, 3, 5)


def test_slice_decompose_05():
    with pytest.raises(ValueError):
        permshatter.slice_decompose([(1, 1), (1, 1)])
    with pytest.raises(ValueError):
        permshatter.slice_decompose([])
    with pytest.raises(ValueError):
        permshatter.slice_decompose([(1, 1), (1, 1, 1)])
    with pytest.raises(ValueError):
        permshatter.slice_decompose([(0, 1)])
