import itertools

import numpy as np
import pytest

import permshatter
from permshatter.utilities.constructions.verify_k_lex_shattering import (
    maximal_profiles,
)


def _all_lex_permutations(b, d):
    components = [permshatter.Permutation(list(rank))
                  for rank in itertools.permutations(range(1, b + 1))]
    return [permshatter.LexPermutation(list(choice))
            for choice in itertools.product(components, repeat=d)]


def test_verify_k_lex_shattering_01():
    assert permshatter.count_lex_constraints(2, 32, 4) == (35960, 575360, 16)
    assert permshatter.count_lex_constraints(2, 8, 4) == (70, 1120, 16)
    assert permshatter.count_lex_constraints(2, 3, 1) == (0, 0, 0)


def test_verify_k_lex_shattering_02():
    assert maximal_profiles(2, 8, 4) == [(2, 2, 2, 2)]
    assert maximal_profiles(3, 1, 3) == [(3, )]
    assert maximal_profiles(4, 2, 4, 4) == [(2, 4), (3, 3), (4, 2)]


def test_verify_k_lex_shattering_03():
    members = _all_lex_permutations(2, 3)
    report = permshatter.verify_k_lex_shattering(members, 3)
    assert report.passed
    assert report.mode == 'exhaustive'
    assert (report.total_constraints, report.checked) == (8, 1)
    assert report.violation is None


def test_verify_k_lex_shattering_04():
    members = _all_lex_permutations(3, 2)
    report = permshatter.verify_k_lex_shattering(members, 2)
    assert report.passed
    assert report.total_constraints == 36
    members = _all_lex_permutations(3, 1)
    assert permshatter.verify_k_lex_shattering(members, 3).passed


def test_verify_k_lex_shattering_05():
    members = _all_lex_permutations(3, 1)
    report = permshatter.verify_k_lex_shattering(members[:5], 3)
    assert not report.passed
    assert report.checked == 0
    assert report.violation == {'positions': [1], 'values': [[1, 2, 3]]}
    members = members[:5] + members[:1]
    report = permshatter.verify_k_lex_shattering(members, 3)
    assert not report.passed
    assert report.checked == 1


def test_verify_k_lex_shattering_06():
    family = permshatter.CubeFamily(
        [permshatter.LexPermutation.identity(2, 8)],
        b=2,
        d=8,
    )
    report = permshatter.verify_k_lex_shattering(family, 4)
    assert not report.passed
    assert report.checked == 0
    assert report.violation == {'positions': [1, 2, 3, 4],
                                'values': [[1, 2]] * 4,
                                }


def test_verify_k_lex_shattering_07():
    members = _all_lex_permutations(2, 3)
    rng = np.random.default_rng(4)
    members = [members[index] for index in rng.permutation(len(members))]
    report = permshatter.verify_k_lex_shattering(members,
                                                 3,
                                                 mode='sampled',
                                                 samples=50,
                                                 seed=2,
                                                 )
    assert report.passed
    assert (report.mode, report.samples, report.seed) == ('sampled', 50, 2)
    report = permshatter.verify_k_lex_shattering(members[:7],
                                                 3,
                                                 mode='sampled',
                                                 samples=50,
                                                 seed=2,
                                                 )
    assert not report.passed


def test_verify_k_lex_shattering_08():
    members = _all_lex_permutations(2, 3)
    report = permshatter.verify_k_lex_shattering(members,
                                                 3,
                                                 budget=4,
                                                 samples=20,
                                                 )
    assert report.mode == 'sampled'
    with pytest.raises(permshatter.BudgetExceededError):
        permshatter.verify_k_lex_shattering(members,
                                            3,
                                            mode='exhaustive',
                                            budget=4,
                                            )


def test_verify_k_lex_shattering_09():
    members = _all_lex_permutations(2, 3)
    with pytest.raises(ValueError):
        permshatter.verify_k_lex_shattering(members, 3, mode='lex')
    with pytest.raises(ValueError):
        permshatter.verify_k_lex_shattering(members, 3, weight=0)
    with pytest.raises(ValueError):
        permshatter.verify_k_lex_shattering([], 3)
    with pytest.raises(ValueError):
        permshatter.verify_k_lex_shattering(
            members + [permshatter.LexPermutation.identity(3, 3)], 3,
        )
    with pytest.raises(TypeError):
        permshatter.verify_k_lex_shattering(
            [permshatter.Permutation.identity(3)], 3,
        )
