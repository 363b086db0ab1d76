import pytest

import permshatter


_POINTS = ((1, 1), (2, 1), (3, 1))


def test_StructureReport_01():
    report = permshatter.StructureReport(points=_POINTS,
                                         index_set=(1, ),
                                         slice_sizes={1: 3},
                                         slice_witnesses={1: _POINTS},
                                         greedy_witnesses={1: _POINTS},
                                         )
    assert report.verdict is None
    assert report.greedy_product == 3
    assert report.product_bound == 6
    judged = report.with_verdict(h=2, verdict='guaranteed_2k',
                                 reason='product')
    assert judged.verdict == 'guaranteed_2k'
    assert judged.reason == 'product'
    assert judged.slice_sizes == {1: 3}
    assert report.verdict is None


def test_StructureReport_02():
    report = permshatter.structure_analysis([(1, 1), (1, 2), (2, 1), (2, 2)],
                                            4,
                                            )
    data = report.to_dict()
    assert data['index_set'] == [1, 2]
    assert data['slice_sizes'] == {'1': 2, '2': 2}
    assert data['product_bound'] == 4
    assert data['verdict'] == 'rigid'
    assert data['rigid_slices'] == {'1': [1, 2], '2': [1, 2]}


def test_StructureReport_03():
    with pytest.raises(ValueError):
        permshatter.StructureReport(points=_POINTS,
                                    index_set=(1, ),
                                    slice_sizes={1: 3},
                                    slice_witnesses={1: _POINTS},
                                    greedy_witnesses={1: _POINTS},
                                    h=1,
                                    verdict='rigid',
                                    )
    with pytest.raises(ValueError):
        permshatter.StructureReport(points=_POINTS,
                                    index_set=(1, ),
                                    slice_sizes={1: 3},
                                    slice_witnesses={1: _POINTS},
                                    greedy_witnesses={1: _POINTS},
                                    verdict='weak',
                                    )
    with pytest.raises(ValueError):
        permshatter.StructureReport(points=_POINTS[:2],
                                    index_set=(1, 2),
                                    slice_sizes={1: 2, 2: 2},
                                    slice_witnesses={},
                                    greedy_witnesses={},
                                    )
    with pytest.raises(ValueError):
        permshatter.StructureReport(points=_POINTS,
                                    index_set=(1, ),
                                    slice_sizes={2: 3},
                                    slice_witnesses={},
                                    greedy_witnesses={},
                                    )
