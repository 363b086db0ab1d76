import itertools

import pytest

import permshatter


def test_scrambling_to_lex_01():
    family = permshatter.PermFamily([permshatter.Permutation.reversal(4)])
    lex = permshatter.scrambling_to_lex(family, 2, 2)
    assert isinstance(lex, permshatter.CubeFamily)
    assert lex[0].to_list() == [[2, 1], [2, 1]]


def test_scrambling_to_lex_02():
    family = permshatter.PermFamily(
        [permshatter.Permutation([3, 1, 2, 6, 4, 5])]
    )
    lex = permshatter.scrambling_to_lex(family, 3, 2)
    assert lex[0].to_list() == [[3, 1, 2], [3, 1, 2]]


def test_scrambling_to_lex_03():
    family = permshatter.PermFamily(
        [permshatter.Permutation(list(rank))
         for rank in itertools.permutations(range(1, 5))]
    )
    lex = permshatter.scrambling_to_lex(family, 2, 2)
    assert len(lex) == 24
    assert permshatter.verify_k_lex_shattering(lex, 2).passed


def test_scrambling_to_lex_04():
    family = permshatter.PermFamily([permshatter.Permutation.reversal(4)])
    with pytest.raises(ValueError):
        permshatter.scrambling_to_lex(family, 2, 3)
    with pytest.raises(TypeError):
        permshatter.scrambling_to_lex(
            permshatter.build_k_lex_random(2, 2, 1), 2, 2,
        )
