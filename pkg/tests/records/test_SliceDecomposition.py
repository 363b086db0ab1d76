import pytest

import permshatter


def test_SliceDecomposition_01():
    decomposition = permshatter.SliceDecomposition(
        ((1, 1), (1, 2), (2, 1)),
        1,
        {2: [(2, 1)], 1: [(1, 1), (1, 2)]},
    )
    assert decomposition.slice == (1, 2)
    assert decomposition.parts == {1: ((1, 1), (1, 2)), 2: ((2, 1), )}
    assert len(decomposition) == 3
    assert repr(decomposition) == 'SliceDecomposition(spos=1, slice=(1, 2))'


def test_SliceDecomposition_02():
    decomposition = permshatter.SliceDecomposition(((3, 1), ), None, {})
    assert decomposition.spos is None
    assert decomposition.slice == ()
    assert decomposition.parts == {}


def test_SliceDecomposition_03():
    with pytest.raises(ValueError):
        permshatter.SliceDecomposition(((1, 1), (1, 2)), None, {})
    with pytest.raises(ValueError):
        permshatter.SliceDecomposition(((1, 1), (1, 2)),
                                       0,
                                       {1: [(1, 1)], 2: [(1, 2)]},
                                       )
    with pytest.raises(ValueError):
        permshatter.SliceDecomposition(((1, 1), (1, 2)),
                                       2,
                                       {1: [(1, 1), (1, 2)]},
                                       )
    with pytest.raises(ValueError):
        permshatter.SliceDecomposition(((1, 1), (1, 2), (1, 3)),
                                       2,
                                       {1: [(1, 1)], 2: [(1, 2)]},
                                       )
