import pytest

import permshatter


def test_rigid_quadruple_01():
    assert permshatter.rigid_quadruple([(1, 1), (1, 2), (2, 1), (2, 2)]) == (
        ((1, 1), (1, 2), (2, 1), (2, 2)),
        2,
    )


def test_rigid_quadruple_02():
    points = [(1, 2, 2), (1, 1, 1), (1, 2, 1), (1, 1, 2)]
    assert permshatter.rigid_quadruple(points) == (
        ((1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2)),
        3,
    )


def test_rigid_quadruple_03():
    quadruple, position = permshatter.rigid_quadruple(
        [(1, 1), (1, 2), (2, 1), (2, 2)]
    )
    family = permshatter.CubeFamily(
        [permshatter.build_pi(position, sigma, tau, 2, 2)
         for sigma in ('standard', 'reverse')
         for tau in ('standard', 'reverse')],
        b=2,
        d=2,
    )
    elements = [permshatter.decode(4, 2, 2, point) for point in quadruple]
    assert permshatter.count_induced(family, elements) == 4


def test_rigid_quadruple_04():
    with pytest.raises(ValueError):
        permshatter.rigid_quadruple([(1, 1), (1, 2), (2, 1)])
