import pytest

import permshatter


def test_regime_01():
    assert permshatter.regime(4, 8).regime == 'sqrtlog'
    assert permshatter.regime(4, 9).regime == 'log'
    assert permshatter.regime(5, 13).regime == 'unknown'
    assert permshatter.regime(3, 4).regime == 'loglog'
    assert permshatter.regime(4, 8).growth == 'Θ(√log n)'


def test_regime_02():
    row = [permshatter.regime(3, t).regime for t in range(1, 7)]
    assert row == ['exact-t', 'exact-t', 'loglog', 'loglog', 'log', 'log']


def test_regime_03():
    row = [permshatter.regime(4, t).regime for t in range(1, 25)]
    assert 'unknown' not in row
    assert row[:8] == ['exact-t', 'exact-t', 'loglog', 'loglog',
                       'sqrtlog', 'sqrtlog', 'sqrtlog', 'sqrtlog']
    assert set(row[8:]) == {'log'}


def test_regime_04():
    unknown = [t for t in range(1, 121)
               if permshatter.regime(5, t).regime == 'unknown']
    assert unknown == list(range(11, 17))
    assert permshatter.regime(5, 10).regime == 'sqrtlog'
    assert permshatter.regime(5, 8).regime == 'loglog'


def test_regime_05():
    assert permshatter.regime(4, 3) == permshatter.RegimeAnswer(4, 3, 'loglog')
    with pytest.raises(ValueError):
        permshatter.regime(2, 1)
    with pytest.raises(ValueError):
        permshatter.regime(4, 25)
    with pytest.raises(ValueError):
        permshatter.regime(4, 0)
    with pytest.raises(TypeError):
        permshatter.regime(4, '3')
