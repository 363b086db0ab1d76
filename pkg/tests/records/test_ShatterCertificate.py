import json

import pytest

import permshatter


def test_ShatterCertificate_01():
    certificate = permshatter.ShatterCertificate(k=3,
                                                 t=2,
                                                 mode='exhaustive',
                                                 min_count=1,
                                                 witness=(1, 2, 3),
                                                 )
    assert not certificate.passed
    assert certificate.witness == (1, 2, 3)
    assert repr(certificate) == ("ShatterCertificate(k=3, t=2, "
                                 "mode='exhaustive', min_count=1, "
                                 "passed=False)")


def test_ShatterCertificate_02():
    certificate = permshatter.ShatterCertificate(k=3,
                                                 t=2,
                                                 mode='sampled',
                                                 min_count=4,
                                                 witness=[2, 5, 9],
                                                 samples=100,
                                                 seed=7,
                                                 n=16,
                                                 family_size=3,
                                                 )
    data = certificate.to_dict()
    assert data == {'k': 3,
                    't': 2,
                    'mode': 'sampled',
                    'samples': 100,
                    'seed': 7,
                    'min_count': 4,
                    'witness': [2, 5, 9],
                    'passed': True,
                    'n': 16,
                    'family_size': 3,
                    }
    assert permshatter.ShatterCertificate.from_dict(data) == certificate


def test_ShatterCertificate_03(tmp_path):
    certificate = permshatter.ShatterCertificate(k=4,
                                                 t=6,
                                                 mode='lex',
                                                 min_count=6,
                                                 n=2 ** 32,
                                                 )
    assert certificate.passed
    assert certificate.witness is None
    path = str(tmp_path / 'certificate.json')
    certificate.write(path)
    with open(path) as file:
        assert json.load(file)['witness'] is None
    assert permshatter.ShatterCertificate.read(path) == certificate


def test_ShatterCertificate_04():
    data = {'k': 3,
            't': 2,
            'mode': 'exhaustive',
            'min_count': 2,
            'witness': [1, 2, 3],
            'passed': False,
            }
    with pytest.raises(ValueError):
        permshatter.ShatterCertificate.from_dict(data)
    data['passed'] = True
    data['comment'] = 'ignored'
    assert permshatter.ShatterCertificate.from_dict(data).passed


def test_ShatterCertificate_05():
    with pytest.raises(ValueError):
        permshatter.ShatterCertificate(k=3,
                                       t=2,
                                       mode='sampled',
                                       min_count=2,
                                       witness=(1, 2, 3),
                                       samples=10,
                                       )
    with pytest.raises(ValueError):
        permshatter.ShatterCertificate(k=3,
                                       t=2,
                                       mode='exhaustive',
                                       min_count=2,
                                       )
    with pytest.raises(ValueError):
        permshatter.ShatterCertificate(k=3,
                                       t=2,
                                       mode='exhaustive',
                                       min_count=2,
                                       witness=(1, 2),
                                       )
    with pytest.raises(ValueError):
        permshatter.ShatterCertificate(k=3,
                                       t=2,
                                       mode='guessed',
                                       min_count=2,
                                       witness=(1, 2, 3),
                                       )
    with pytest.raises(TypeError):
        permshatter.ShatterCertificate(k=3,
                                       t=2.0,
                                       mode='lex',
                                       min_count=2,
                                       )
    with pytest.raises(TypeError):
        permshatter.ShatterCertificate.from_dict([3, 2])
