import pytest

import permshatter


def test_build_sqrtlog_family_01():
    family = permshatter.build_sqrtlog_family(16, 4, seed=0)
    assert (family.b, family.d, family.n) == (4, 2, 16)
    assert len(family) == len(family.lex_members) + 8
    assert list(family.pi_members) == permshatter.all_pis(4, 2)
    assert family.lex_report.passed
    assert family.lex_report.weight == 4
    assert permshatter.min_shatter(family, 4)[0] >= 8


def test_build_sqrtlog_family_02():
    with pytest.raises(ValueError):
        permshatter.build_sqrtlog_family(16, 3)
    with pytest.raises(ValueError):
        permshatter.build_sqrtlog_family(1, 4)


def test_build_sqrtlog_family_03():
    family = permshatter.build_sqrtlog_family(2 ** 16, 4, seed=0)
    assert (family.b, family.d) == (16, 4)
    assert family.lex_report.mode == 'exhaustive'
    certificate = permshatter.verify_t_shattering(family,
                                                  4,
                                                  8,
                                                  mode='sampled',
                                                  samples=10 ** 5,
                                                  seed=17,
                                                  )
    assert certificate.min_count >= 8
    assert certificate.passed
