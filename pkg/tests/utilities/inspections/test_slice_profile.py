from hypothesis import given, settings
from hypothesis import strategies as st

import permshatter


def test_slice_profile_01():
    report = permshatter.slice_profile([(1, 1), (2, 1), (3, 1)])
    assert report.index_set == (1, )
    assert report.slice_sizes == {1: 3}
    assert report.verdict is None


def test_slice_profile_02():
    report = permshatter.slice_profile([(1, 1), (1, 2), (2, 1), (2, 2)])
    assert report.slice_sizes == {1: 2, 2: 2}
    assert report.greedy_product == 4
    assert report.product_bound == 4
    assert report.greedy_witnesses == {
        1: ((1, 1), (1, 2), (2, 1), (2, 2)),
        2: ((1, 1), (1, 2)),
    }


def test_slice_profile_03():
    report = permshatter.slice_profile([(1, 1), (2, 1), (3, 1), (3, 2)])
    assert report.index_set == (1, 2)
    assert report.slice_sizes == {1: 3, 2: 2}
    assert report.slice_witnesses[2] == ((3, 1), (3, 2))
    assert report.to_dict()['slice_sizes'] == {'1': 3, '2': 2}


@settings(max_examples=50, deadline=None)
@given(st.sets(st.tuples(st.integers(1, 3),
                         st.integers(1, 3),
                         st.integers(1, 3),
                         ),
               min_size=2,
               max_size=12,
               ))
def test_slice_profile_04(points):
    report = permshatter.slice_profile(points)
    assert set(report.greedy_witnesses) == set(report.index_set)
    assert report.greedy_product >= len(points)
    product = 1
    for i, witness in report.slice_witnesses.items():
        decomposition = permshatter.slice_decompose(witness)
        assert decomposition.spos == i
        assert len(decomposition.slice) == report.slice_sizes[i]
        product *= report.slice_sizes[i]
    assert report.greedy_product <= product
