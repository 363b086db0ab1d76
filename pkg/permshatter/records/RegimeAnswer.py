class RegimeAnswer():
    r"""The growth class of the minimum family size in ``n`` for fixed
    ``k`` and ``t``.

    Basic usage:
        >>> answer = permshatter.regime(4, 8)
        >>> answer.regime
        'sqrtlog'
        >>> answer.growth
        'Θ(√log n)'
    """

    ### CLASS VARIABLES ###

    __slots__ = ('_k',
                 '_t',
                 '_regime',
                 )

    GROWTH = {'exact-t': 'exactly t',
              'loglog': 'Θ(log log n)',
              'sqrtlog': 'Θ(√log n)',
              'log': 'Θ(log n)',
              'unknown': 'unknown',
              }

    ### INITIALISER ###

    def __init__(self, k: int, t: int, regime: str) -> None:
        r'Initialises self.'
        if regime not in self.GROWTH:
            raise ValueError("'regime' must be one of "
                             f"{', '.join(self.GROWTH)}")
        self._k = k
        self._t = t
        self._regime = regime

    ### SPECIAL METHODS ###

    def __repr__(self) -> str:
        return (f'{type(self).__name__}(k={self._k}, t={self._t}, '
                f'regime={self._regime!r})')

    def __eq__(self, other) -> bool:
        if not isinstance(other, RegimeAnswer):
            return NotImplemented
        return ((self._k, self._t, self._regime)
                == (other._k, other._t, other._regime))

    def __hash__(self) -> int:
        return hash((self._k, self._t, self._regime))

    ### PUBLIC PROPERTIES ###

    @property
    def k(self) -> int:
        return self._k

    @property
    def t(self) -> int:
        return self._t

    @property
    def regime(self) -> str:
        return self._regime

    @property
    def growth(self) -> str:
        r'Human-readable growth rate of the regime.'
        return self.GROWTH[self._regime]
