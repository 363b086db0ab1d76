import csv
from typing import Any, Iterable, TextIO


class ExactResult():
    r"""The exact minimum size ``m`` of a family of permutations of ``[n]``
    that t-shatters every k-subset, with a family attaining it.

    Basic usage:
        >>> result = permshatter.f_exact(4, 3, 2)
        >>> result.value
        2
        >>> len(result.optimal_family)
        2

    :meth:`write_table`:
        Writes solved results as CSV with the columns ``n,k,t,m``.
    """

    ### CLASS VARIABLES ###

    __slots__ = ('_n',
                 '_k',
                 '_t',
                 '_value',
                 '_optimal_family',
                 '_note',
                 '_nodes',
                 '_symmetry_reduced',
                 )

    FIELDS = ('n', 'k', 't', 'm')

    ### INITIALISER ###

    def __init__(self,
                 *,
                 n: int,
                 k: int,
                 t: int,
                 value: int,
                 optimal_family: Any,
                 note: str,
                 nodes: int,
                 symmetry_reduced: bool,
                 ) -> None:
        r'Initialises self.'
        if len(optimal_family) != value:
            raise ValueError("'optimal_family' must have 'value' members")
        self._n = n
        self._k = k
        self._t = t
        self._value = value
        self._optimal_family = optimal_family
        self._note = note
        self._nodes = nodes
        self._symmetry_reduced = symmetry_reduced

    ### SPECIAL METHODS ###

    def __repr__(self) -> str:
        return (f'{type(self).__name__}(n={self._n}, k={self._k}, '
                f't={self._t}, value={self._value})')

    ### PUBLIC METHODS ###

    def to_row(self) -> dict:
        r'The CSV row of the result.'
        return {'n': self._n, 'k': self._k, 't': self._t, 'm': self._value}

    @classmethod
    def write_table(cls,
                    results: Iterable['ExactResult'],
                    stream: TextIO,
                    ) -> None:
        r'Writes results to ``stream`` as CSV, header included.'
        writer = csv.DictWriter(stream, fieldnames=cls.FIELDS)
        writer.writeheader()
        for result in results:
            writer.writerow(result.to_row())

    ### PUBLIC PROPERTIES ###

    @property
    def n(self) -> int:
        return self._n

    @property
    def k(self) -> int:
        return self._k

    @property
    def t(self) -> int:
        return self._t

    @property
    def value(self) -> int:
        r'The minimum family size.'
        return self._value

    @property
    def optimal_family(self) -> Any:
        r'A :class:`PermFamily` of :attr:`value` members that succeeds.'
        return self._optimal_family

    @property
    def note(self) -> str:
        r'How exhaustiveness was established.'
        return self._note

    @property
    def nodes(self) -> int:
        r'Search nodes visited over all family sizes tried.'
        return self._nodes

    @property
    def symmetry_reduced(self) -> bool:
        r'Whether the first member was fixed to the identity.'
        return self._symmetry_reduced
