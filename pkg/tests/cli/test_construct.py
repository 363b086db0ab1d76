import json

from click.testing import CliRunner

import permshatter
from permshatter.cli.main import main


def _invoke(tmp_path, *args, env=None):
    family = str(tmp_path / 'family.json')
    certificate = str(tmp_path / 'certificate.json')
    result = CliRunner().invoke(
        main,
        ['construct', *args, '-o', family, '-c', certificate],
        env=env,
    )
    return result, family, certificate


def test_construct_01(tmp_path):
    result, family, certificate = _invoke(tmp_path,
                                          '--kind', 'monotone',
                                          '--n', '8',
                                          '--t', '2',
                                          )
    assert result.exit_code == 0
    assert 'passed' in result.output
    assert permshatter.PermFamily.read(family) == (
        permshatter.monotone_family(8, 2)
    )
    with open(certificate) as file:
        data = json.load(file)
    assert data['mode'] == 'exhaustive'
    assert data['min_count'] == 2
    assert data['witness'] == [1, 2]
    assert data['parameters'] == {'kind': 'monotone',
                                  'n': 8,
                                  'k': 2,
                                  't': 2,
                                  'seed': 0,
                                  'verify_mode': 'auto',
                                  }


def test_construct_02(tmp_path):
    result, family, certificate = _invoke(tmp_path,
                                          '--kind', 'loglog',
                                          '--n', '2^32',
                                          '--k', '4',
                                          )
    assert result.exit_code == 0
    with open(certificate) as file:
        data = json.load(file)
    assert data['mode'] == 'lex'
    assert data['passed']
    assert data['witness'] is None
    assert data['parameters']['n'] == 2 ** 32
    assert data['parameters']['t'] == 4
    cube = permshatter.CubeFamily.read(family)
    assert cube.n == 2 ** 32


def test_construct_03(tmp_path):
    result, _, _ = _invoke(tmp_path, '--kind', 'monotone', '--n', '8')
    assert result.exit_code == 2
    result, _, _ = _invoke(tmp_path, '--kind', 'loglog', '--n', '64')
    assert result.exit_code == 2
    result, _, _ = _invoke(tmp_path,
                           '--kind', 'loglog',
                           '--n', '64',
                           '--k', '4',
                           '--t', '5',
                           )
    assert result.exit_code == 2
    result, _, _ = _invoke(tmp_path, '--kind', 'triangular', '--n', '8')
    assert result.exit_code == 2


def test_construct_04(tmp_path):
    result, _, _ = _invoke(tmp_path,
                           '--kind', 'scrambling',
                           '--n', '1000',
                           '--k', '3',
                           '--subset-budget', '1000',
                           )
    assert result.exit_code == 3
    result, _, _ = _invoke(tmp_path,
                           '--kind', 'scrambling',
                           '--n', '1000',
                           '--k', '3',
                           env={'PERMSHATTER_SUBSET_BUDGET': '1000'},
                           )
    assert result.exit_code == 3
