import json
from typing import Optional


class ShatterCertificate():
    r"""The outcome of a t-shattering verification of a family on k-subsets.

    Basic usage:
        >>> certificate = permshatter.ShatterCertificate(
        ...     k=3,
        ...     t=2,
        ...     mode='exhaustive',
        ...     min_count=1,
        ...     witness=(1, 2, 3),
        ... )
        >>> certificate.passed
        False

        ``mode`` is one of:

        * ``'exhaustive'``: ``min_count`` is the true minimum over all
          k-subsets and ``witness`` the lexicographically least subset
          attaining it.
        * ``'sampled'``: the minimum over ``samples`` uniformly drawn
          k-subsets; ``seed`` is then required.
        * ``'lex'``: the family was certified by its lex constraint check,
          ``min_count`` holds the guaranteed bound (``0`` when that check
          failed) and there is no witness.

    JSON:
        :meth:`to_dict` and :meth:`from_dict` implement the certificate file
        format. The ``passed`` field is derived and checked on loading.
    """

    ### CLASS VARIABLES ###

    __slots__ = ('_k',
                 '_t',
                 '_mode',
                 '_min_count',
                 '_witness',
                 '_samples',
                 '_seed',
                 '_n',
                 '_family_size',
                 )

    MODES = ('exhaustive', 'sampled', 'lex')

    ### INITIALISER ###

    def __init__(self,
                 *,
                 k: int,
                 t: int,
                 mode: str,
                 min_count: int,
                 witness: Optional[tuple] = None,
                 samples: Optional[int] = None,
                 seed: Optional[int] = None,
                 n: Optional[int] = None,
                 family_size: Optional[int] = None,
                 ) -> None:
        r'Initialises self.'
        for name, value in (('k', k), ('t', t), ('min_count', min_count)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"'{name}' must be 'int'")
        if k < 1 or t < 1 or min_count < 0:
            raise ValueError("'k' and 't' must be positive and 'min_count' "
                             "nonnegative")
        if mode not in self.MODES:
            raise ValueError("'mode' must be 'exhaustive', 'sampled' or "
                             "'lex'")
        if mode == 'sampled':
            if not isinstance(samples, int) or samples < 1:
                raise ValueError("sampled certificates need a positive "
                                 "'samples'")
            if not isinstance(seed, int):
                raise ValueError("sampled certificates need an 'int' seed")
        if witness is not None:
            witness = tuple(int(element) for element in witness)
            if len(witness) != k:
                raise ValueError(f"'witness' must have size {k}")
        elif mode != 'lex':
            raise ValueError("'witness' is required unless mode is 'lex'")
        self._k = k
        self._t = t
        self._mode = mode
        self._min_count = min_count
        self._witness = witness
        self._samples = samples
        self._seed = seed
        self._n = n
        self._family_size = family_size

    ### SPECIAL METHODS ###

    def __repr__(self) -> str:
        return (f'{type(self).__name__}(k={self._k}, t={self._t}, '
                f'mode={self._mode!r}, min_count={self._min_count}, '
                f'passed={self.passed})')

    def __eq__(self, other) -> bool:
        if not isinstance(other, ShatterCertificate):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash(json.dumps(self.to_dict(), sort_keys=True))

    ### PUBLIC METHODS ###

    def to_dict(self) -> dict:
        r'The certificate file representation.'
        return {'k': self._k,
                't': self._t,
                'mode': self._mode,
                'samples': self._samples,
                'seed': self._seed,
                'min_count': self._min_count,
                'witness': (list(self._witness)
                            if self._witness is not None else None),
                'passed': self.passed,
                'n': self._n,
                'family_size': self._family_size,
                }

    @classmethod
    def from_dict(cls, data: dict) -> 'ShatterCertificate':
        r'Inverse of :meth:`to_dict`.'
        if not isinstance(data, dict):
            raise TypeError("'data' must be 'dict'")
        certificate = cls(k=data['k'],
                          t=data['t'],
                          mode=data['mode'],
                          min_count=data['min_count'],
                          witness=data.get('witness'),
                          samples=data.get('samples'),
                          seed=data.get('seed'),
                          n=data.get('n'),
                          family_size=data.get('family_size'),
                          )
        if 'passed' in data and data['passed'] != certificate.passed:
            raise ValueError("'passed' disagrees with 'min_count' and 't'")
        return certificate

    def write(self, path: str) -> None:
        r'Writes the certificate to a JSON file.'
        with open(path, 'w') as file:
            json.dump(self.to_dict(), file, indent=2)

    @classmethod
    def read(cls, path: str) -> 'ShatterCertificate':
        r'Reads a certificate written by :meth:`write`.'
        with open(path) as file:
            return cls.from_dict(json.load(file))

    ### PUBLIC PROPERTIES ###

    @property
    def k(self) -> int:
        return self._k

    @property
    def t(self) -> int:
        return self._t

    @property
    def mode(self) -> str:
        return self._mode

    @property
    def min_count(self) -> int:
        r'Least number of induced patterns observed (or guaranteed).'
        return self._min_count

    @property
    def witness(self) -> Optional[tuple]:
        r'A subset attaining :attr:`min_count`.'
        return self._witness

    @property
    def samples(self) -> Optional[int]:
        return self._samples

    @property
    def seed(self) -> Optional[int]:
        return self._seed

    @property
    def n(self) -> Optional[int]:
        return self._n

    @property
    def family_size(self) -> Optional[int]:
        return self._family_size

    @property
    def passed(self) -> bool:
        r'Whether every checked k-subset is t-shattered.'
        return self._min_count >= self._t
