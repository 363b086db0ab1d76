import pytest

import permshatter


def test_LexShatterReport_01():
    report = permshatter.LexShatterReport(b=2,
                                          d=8,
                                          k=4,
                                          weight=None,
                                          mode='exhaustive',
                                          total_constraints=1120,
                                          checked=70,
                                          )
    assert report.passed
    assert report.to_dict()['passed']
    assert permshatter.LexShatterReport.from_dict(report.to_dict()) == report


def test_LexShatterReport_02():
    violation = {'positions': [1, 2], 'values': [[1, 2], [1, 2]]}
    report = permshatter.LexShatterReport(b=2,
                                          d=4,
                                          k=4,
                                          weight=2,
                                          mode='sampled',
                                          total_constraints=96,
                                          checked=3,
                                          violation=violation,
                                          samples=10,
                                          seed=1,
                                          )
    assert not report.passed
    data = report.to_dict()
    assert data['violation'] == violation
    assert (data['samples'], data['seed'], data['weight']) == (10, 1, 2)
    assert permshatter.LexShatterReport.from_dict(data) == report


def test_LexShatterReport_03():
    with pytest.raises(ValueError):
        permshatter.LexShatterReport(b=2,
                                     d=4,
                                     k=4,
                                     weight=None,
                                     mode='lex',
                                     total_constraints=0,
                                     checked=0,
                                     )
    with pytest.raises(TypeError):
        permshatter.LexShatterReport(b=2,
                                     d=4,
                                     k=4,
                                     weight=None,
                                     mode='exhaustive',
                                     total_constraints=0,
                                     checked=0,
                                     violation=[1, 2],
                                     )
