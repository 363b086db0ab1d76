import os

from click.testing import CliRunner

import permshatter
from permshatter.cli.main import main


def test_exact_01(tmp_path):
    output = str(tmp_path / 'table.csv')
    result = CliRunner().invoke(main, ['exact',
                                       '--n', '4',
                                       '--k', '3',
                                       '--t', '1',
                                       '--t', '2',
                                       '-o', output,
                                       ])
    assert result.exit_code == 0
    with open(output) as file:
        assert file.read().splitlines() == ['n,k,t,m', '4,3,1,1', '4,3,2,2']


def test_exact_02(tmp_path):
    families = str(tmp_path / 'families')
    result = CliRunner().invoke(main, ['exact',
                                       '--n', '4',
                                       '--k', '3',
                                       '--t', '2',
                                       '--families', families,
                                       ])
    assert result.exit_code == 0
    assert result.output.splitlines() == ['n,k,t,m', '4,3,2,2']
    family = permshatter.PermFamily.read(os.path.join(families,
                                                      'f_3_4_2.json'))
    assert len(family) == 2
    assert permshatter.min_shatter(family, 3)[0] >= 2


def test_exact_03():
    runner = CliRunner()
    result = runner.invoke(main, ['exact', '--n', '9', '--k', '3',
                                  '--t', '2'])
    assert result.exit_code == 3
    result = runner.invoke(main,
                           ['exact', '--n', '4', '--k', '3', '--t', '2'],
                           env={'PERMSHATTER_EXACT_CAP': '3'},
                           )
    assert result.exit_code == 3
    result = runner.invoke(main, ['exact', '--n', '4', '--k', '3',
                                  '--t', '7'])
    assert result.exit_code == 2
