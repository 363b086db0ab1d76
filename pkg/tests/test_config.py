import dataclasses

import pytest

import permshatter
from permshatter.config import DEFAULTS


def test_config_01():
    budgets = permshatter.Budgets()
    assert budgets.subset_budget == 10 ** 7
    assert budgets.constraint_budget == 10 ** 7
    assert budgets.exact_cap == 7
    assert budgets.lex_samples == 10 ** 4
    assert budgets.max_retries == 64
    with pytest.raises(dataclasses.FrozenInstanceError):
        budgets.exact_cap = 8


def test_config_02():
    budgets = permshatter.Budgets.from_env({
        'PERMSHATTER_EXACT_CAP': '5',
        'PERMSHATTER_SUBSET_BUDGET': '1_000_000',
        'PERMSHATTER_MAX_RETRIES': '',
    })
    assert budgets.exact_cap == 5
    assert budgets.subset_budget == 10 ** 6
    assert budgets.max_retries == 64
    assert permshatter.Budgets.from_env({}) == permshatter.Budgets()


def test_config_03():
    with pytest.raises(ValueError):
        permshatter.Budgets.from_env({'PERMSHATTER_LEX_SAMPLES': 'many'})
    with pytest.raises(ValueError):
        permshatter.Budgets.from_env({'PERMSHATTER_EXACT_CAP': '0'})
    with pytest.raises(ValueError):
        permshatter.Budgets(subset_budget=-1)
    with pytest.raises(TypeError):
        permshatter.Budgets(exact_cap=7.5)


def test_config_04():
    assert isinstance(DEFAULTS, permshatter.Budgets)
