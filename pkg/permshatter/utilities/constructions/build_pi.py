from ...core.PiPermutation import PiPermutation


def build_pi(i: int, sigma: str, tau: str, b: int, d: int) -> PiPermutation:
    r"""Returns the order of ``[b]^d`` that sorts points by coordinate ``i``
    in direction ``sigma`` and breaks ties by the lex order in direction
    ``tau``. Directions are ``'standard'`` or ``'reverse'``.

    Basic usage:
        >>> pi = permshatter.build_pi(2, 'standard', 'standard', 2, 2)
        >>> pi.sorted_points([(1, 1), (1, 2), (2, 1), (2, 2)])
        ((1, 1), (2, 1), (1, 2), (2, 2))

    .. error::

        >>> permshatter.build_pi(3, 'standard', 'standard', 2, 2)
        ValueError: 'position' must lie between 1 and 2
    """
    return PiPermutation(i, sigma, tau, b=b, d=d)


def all_pis(b: int, d: int) -> list:
    r'The ``4d`` orders :func:`build_pi` produces on ``[b]^d``.'
    return [build_pi(i, sigma, tau, b, d)
            for i in range(1, d + 1)
            for sigma in ('standard', 'reverse')
            for tau in ('standard', 'reverse')]
