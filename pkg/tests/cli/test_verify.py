import json

from click.testing import CliRunner

import permshatter
from permshatter.cli._common import lex_bound, lex_certificate
from permshatter.cli.main import main


def test_verify_01(tmp_path):
    family = str(tmp_path / 'family.json')
    certificate = str(tmp_path / 'certificate.json')
    permshatter.monotone_family(8, 2).write(family)
    result = CliRunner().invoke(main, ['verify',
                                       '-f', family,
                                       '--k', '3',
                                       '--t', '2',
                                       '-c', certificate,
                                       ])
    assert result.exit_code == 0
    certificate = permshatter.ShatterCertificate.read(certificate)
    assert certificate.mode == 'exhaustive'
    assert certificate.passed
    assert certificate.witness == (1, 2, 3)


def test_verify_02(tmp_path):
    family = str(tmp_path / 'family.json')
    certificate = str(tmp_path / 'certificate.json')
    permshatter.monotone_family(8, 1).write(family)
    result = CliRunner().invoke(main, ['verify',
                                       '-f', family,
                                       '--k', '3',
                                       '--t', '2',
                                       '-c', certificate,
                                       ])
    assert result.exit_code == 1
    with open(certificate) as file:
        data = json.load(file)
    assert not data['passed']
    assert data['min_count'] == 1


def test_verify_03(tmp_path):
    family = str(tmp_path / 'family.json')
    permshatter.PermFamily.random(16, 4, seed=3).write(family)
    result = CliRunner().invoke(main, ['verify',
                                       '-f', family,
                                       '--k', '3',
                                       '--t', '1',
                                       '--mode', 'sampled',
                                       '--samples', '50',
                                       '--seed', '9',
                                       ])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert (data['mode'], data['samples'], data['seed']) == ('sampled', 50, 9)


def test_verify_04(tmp_path):
    family = str(tmp_path / 'family.json')
    permshatter.monotone_family(8, 2).write(family)
    result = CliRunner().invoke(main, ['verify',
                                       '-f', family,
                                       '--k', '3',
                                       '--t', '2',
                                       '--mode', 'lex',
                                       ])
    assert result.exit_code == 2
    result = CliRunner().invoke(main, ['verify',
                                       '-f', str(tmp_path / 'missing.json'),
                                       '--k', '3',
                                       '--t', '2',
                                       ])
    assert result.exit_code == 2


def test_verify_05(tmp_path):
    family = str(tmp_path / 'family.json')
    permshatter.monotone_family(8, 2).write(family)
    result = CliRunner().invoke(main, ['verify',
                                       '-f', family,
                                       '--k', '3',
                                       '--t', '2',
                                       '--subset-budget', '10',
                                       ])
    assert result.exit_code == 3


def test_verify_06(tmp_path):
    family = str(tmp_path / 'family.json')
    built = str(tmp_path / 'built.json')
    checked = str(tmp_path / 'checked.json')
    runner = CliRunner()
    result = runner.invoke(main, ['construct',
                                  '--kind', 'sqrtlog',
                                  '--n', '16',
                                  '--k', '4',
                                  '--seed', '0',
                                  '-o', family,
                                  '-c', built,
                                  ])
    assert result.exit_code == 0
    result = runner.invoke(main, ['verify',
                                  '-f', family,
                                  '--k', '4',
                                  '--t', '8',
                                  '-c', checked,
                                  ])
    assert result.exit_code == 0
    with open(built) as file:
        data = json.load(file)
    del data['parameters']
    assert permshatter.ShatterCertificate.from_dict(data) == (
        permshatter.ShatterCertificate.read(checked)
    )


def test_verify_07(tmp_path):
    family = str(tmp_path / 'family.json')
    cube = permshatter.build_loglog_family(64, 4, seed=7)
    cube.write(family)
    assert permshatter.min_shatter(cube, 4)[0] == 4
    runner = CliRunner()
    result = runner.invoke(main, ['verify',
                                  '-f', family,
                                  '--k', '4',
                                  '--t', '8',
                                  '--mode', 'lex',
                                  ])
    assert result.exit_code == 1
    data = json.loads(result.output)
    assert (data['min_count'], data['passed']) == (4, False)
    result = runner.invoke(main, ['verify',
                                  '-f', family,
                                  '--k', '4',
                                  '--t', '4',
                                  '--mode', 'lex',
                                  ])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert (data['min_count'], data['passed']) == (4, True)


def test_verify_08():
    family = permshatter.build_sqrtlog_family(16, 4, seed=0)
    assert lex_bound(family, 4, 4) == 8
    assert lex_bound(family, 4, None) == 8
    assert lex_bound(family, 4, 3) == 4
    assert lex_bound(family.lex_family(), 4, 4) == 4
    assert lex_bound(family, 2, None) == 2
    certificate = lex_certificate(family, 4, 8)
    assert (certificate.min_count, certificate.passed) == (8, True)
    certificate = lex_certificate(family.lex_family(), 4, 8)
    assert (certificate.min_count, certificate.passed) == (4, False)
