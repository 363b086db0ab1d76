from typing import Optional


class LexShatterReport():
    r"""The outcome of a k-lex-shattering check of a family of
    lex-permutations of ``[b]^d``.

    A constraint group is a set ``I`` of positions together with a set
    ``Y_i`` of at least two values per position; the family passes on a group
    when it realises every combination of component orders of the ``Y_i``.
    :attr:`total_constraints` counts (group, combination) pairs and
    :attr:`checked` the groups that were examined. When the check fails,
    :attr:`violation` holds the first failing group as
    ``{'positions': [...], 'values': [[...], ...]}`` (1-based).

    Basic usage:
        >>> report = permshatter.LexShatterReport(
        ...     b=2, d=8, k=4, weight=None, mode='exhaustive',
        ...     total_constraints=1120, checked=70,
        ... )
        >>> report.passed
        True
    """

    ### CLASS VARIABLES ###

    __slots__ = ('_b',
                 '_d',
                 '_k',
                 '_weight',
                 '_mode',
                 '_total_constraints',
                 '_checked',
                 '_violation',
                 '_samples',
                 '_seed',
                 )

    ### INITIALISER ###

    def __init__(self,
                 *,
                 b: int,
                 d: int,
                 k: int,
                 weight: Optional[int],
                 mode: str,
                 total_constraints: int,
                 checked: int,
                 violation: Optional[dict] = None,
                 samples: Optional[int] = None,
                 seed: Optional[int] = None,
                 ) -> None:
        r'Initialises self.'
        if mode not in ('exhaustive', 'sampled'):
            raise ValueError("'mode' must be 'exhaustive' or 'sampled'")
        if violation is not None and not isinstance(violation, dict):
            raise TypeError("'violation' must be 'dict'")
        self._b = b
        self._d = d
        self._k = k
        self._weight = weight
        self._mode = mode
        self._total_constraints = total_constraints
        self._checked = checked
        self._violation = violation
        self._samples = samples
        self._seed = seed

    ### SPECIAL METHODS ###

    def __repr__(self) -> str:
        return (f'{type(self).__name__}(b={self._b}, d={self._d}, '
                f'k={self._k}, mode={self._mode!r}, passed={self.passed})')

    def __eq__(self, other) -> bool:
        if not isinstance(other, LexShatterReport):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    __hash__ = None

    ### PUBLIC METHODS ###

    def to_dict(self) -> dict:
        return {'b': self._b,
                'd': self._d,
                'k': self._k,
                'weight': self._weight,
                'mode': self._mode,
                'samples': self._samples,
                'seed': self._seed,
                'total_constraints': self._total_constraints,
                'checked': self._checked,
                'violation': self._violation,
                'passed': self.passed,
                }

    @classmethod
    def from_dict(cls, data: dict) -> 'LexShatterReport':
        return cls(b=data['b'],
                   d=data['d'],
                   k=data['k'],
                   weight=data.get('weight'),
                   mode=data['mode'],
                   total_constraints=data['total_constraints'],
                   checked=data['checked'],
                   violation=data.get('violation'),
                   samples=data.get('samples'),
                   seed=data.get('seed'),
                   )

    ### PUBLIC PROPERTIES ###

    @property
    def b(self) -> int:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    @property
    def k(self) -> int:
        return self._k

    @property
    def weight(self) -> Optional[int]:
        r'Cap on the weight of the checked groups, ``None`` for no cap.'
        return self._weight

    @property
    def mode(self) -> str:
        return self._mode

    @property
    def total_constraints(self) -> int:
        return self._total_constraints

    @property
    def checked(self) -> int:
        return self._checked

    @property
    def violation(self) -> Optional[dict]:
        return self._violation

    @property
    def samples(self) -> Optional[int]:
        return self._samples

    @property
    def seed(self) -> Optional[int]:
        return self._seed

    @property
    def passed(self) -> bool:
        r'Whether no checked group was violated.'
        return self._violation is None
