import pytest

import permshatter


def test_lex_compare_01():
    rho = permshatter.LexPermutation.identity(2, 3)
    assert permshatter.lex_compare(rho, (1, 1, 2), (1, 2, 1)) == 'less'
    assert permshatter.lex_compare(rho, (1, 2, 1), (1, 1, 2)) == 'greater'


def test_lex_compare_02():
    rho = permshatter.LexPermutation([
        permshatter.Permutation.from_order([2, 1, 3]),
        permshatter.Permutation.identity(3),
    ])
    assert permshatter.lex_compare(rho, (1, 1), (2, 3)) == 'greater'
    assert permshatter.lex_compare(rho, (3, 1), (3, 2)) == 'less'


def test_lex_compare_03():
    rho = permshatter.LexPermutation.identity(3, 2)
    with pytest.raises(ValueError):
        permshatter.lex_compare(rho, (1, 1), (1, 1))
    with pytest.raises(TypeError):
        permshatter.lex_compare(permshatter.Permutation.identity(3),
                                (1, 1),
                                (1, 2),
                                )
