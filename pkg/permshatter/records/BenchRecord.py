import csv
from typing import Iterable, Optional, TextIO


class BenchRecord():
    r"""One point of a construction sweep: the family size a construction
    needed at a given ``n`` and how it was verified.

    Failed points keep :attr:`error` and leave the measurements empty.

    Basic usage:
        >>> record = permshatter.BenchRecord(
        ...     n=256, construction='loglog', family_size=120,
        ...     build_seconds=0.8, verification_mode='exhaustive',
        ...     passed=True,
        ... )
        >>> record.to_row()['construction']
        'loglog'
    """

    ### CLASS VARIABLES ###

    __slots__ = ('_n',
                 '_construction',
                 '_family_size',
                 '_build_seconds',
                 '_verification_mode',
                 '_passed',
                 '_error',
                 )

    CONSTRUCTIONS = ('loglog', 'sqrtlog', 'scrambling')

    FIELDS = ('n',
              'construction',
              'family_size',
              'build_seconds',
              'verification_mode',
              'passed',
              'error',
              )

    ### INITIALISER ###

    def __init__(self,
                 *,
                 n: int,
                 construction: str,
                 family_size: Optional[int] = None,
                 build_seconds: Optional[float] = None,
                 verification_mode: Optional[str] = None,
                 passed: Optional[bool] = None,
                 error: Optional[str] = None,
                 ) -> None:
        r'Initialises self.'
        if construction not in self.CONSTRUCTIONS:
            raise ValueError("'construction' must be 'loglog', 'sqrtlog' or "
                             "'scrambling'")
        self._n = n
        self._construction = construction
        self._family_size = family_size
        self._build_seconds = build_seconds
        self._verification_mode = verification_mode
        self._passed = passed
        self._error = error

    ### SPECIAL METHODS ###

    def __repr__(self) -> str:
        return (f'{type(self).__name__}(n={self._n}, '
                f'construction={self._construction!r}, '
                f'family_size={self._family_size})')

    ### PUBLIC METHODS ###

    def to_row(self) -> dict:
        r'The CSV row of the record; missing values are empty strings.'
        row = {'n': self._n,
               'construction': self._construction,
               'family_size': self._family_size,
               'build_seconds': (None if self._build_seconds is None
                                 else f'{self._build_seconds:.4f}'),
               'verification_mode': self._verification_mode,
               'passed': self._passed,
               'error': self._error,
               }
        return {key: '' if value is None else value
                for key, value in row.items()}

    @classmethod
    def write_csv(cls,
                  records: Iterable['BenchRecord'],
                  stream: TextIO,
                  ) -> None:
        r'Writes records to ``stream`` as CSV, header included.'
        writer = csv.DictWriter(stream, fieldnames=cls.FIELDS)
        writer.writeheader()
        for record in records:
            writer.writerow(record.to_row())

    ### PUBLIC PROPERTIES ###

    @property
    def n(self) -> int:
        return self._n

    @property
    def construction(self) -> str:
        return self._construction

    @property
    def family_size(self) -> Optional[int]:
        return self._family_size

    @property
    def build_seconds(self) -> Optional[float]:
        return self._build_seconds

    @property
    def verification_mode(self) -> Optional[str]:
        return self._verification_mode

    @property
    def passed(self) -> Optional[bool]:
        return self._passed

    @property
    def error(self) -> Optional[str]:
        return self._error
