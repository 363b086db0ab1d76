import click
import pytest
from click.testing import CliRunner

import permshatter
from permshatter.cli._common import POWER_INT
from permshatter.cli.main import main


def test_main_01():
    assert POWER_INT.convert('2^16', None, None) == 65536
    assert POWER_INT.convert('2**10', None, None) == 1024
    assert POWER_INT.convert('1_000', None, None) == 1000
    assert POWER_INT.convert(12, None, None) == 12
    with pytest.raises(click.BadParameter):
        POWER_INT.convert('two', None, None)


def test_main_02():
    runner = CliRunner()
    result = runner.invoke(main, ['--version'])
    assert result.exit_code == 0
    assert permshatter.__version__ in result.output
    result = runner.invoke(main, ['--help'])
    assert result.exit_code == 0
    for command in ('construct', 'verify', 'adversary', 'exact', 'regime',
                    'bench'):
        assert command in result.output


def test_main_03():
    result = CliRunner().invoke(main, ['frobnicate'])
    assert result.exit_code == 2
