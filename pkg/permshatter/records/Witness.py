import json
from typing import Any, Optional


class Witness():
    r"""A k-subset extracted from a family by an adversary, together with
    the number of patterns the adversary argument guarantees at most and the
    number the family actually induces on it.

    Basic usage:
        >>> family = permshatter.monotone_family(64, 2)
        >>> witness = permshatter.chain_witness(family, 3, best_effort=True)
        >>> witness.guaranteed_bound
        4
        >>> witness.achieved_count
        2
        >>> witness.holds
        True

    JSON:
        :meth:`to_dict` gives ``k``, ``guaranteed_bound``, ``achieved_count``,
        ``witness``, ``method``, ``valid_precondition`` and ``seed``.

    .. note::

        :attr:`pairs` (chain method) and :attr:`tree` / :attr:`subdivision`
        (tree method) keep the intermediate objects for inspection; they are
        not serialised.
    """

    ### CLASS VARIABLES ###

    __slots__ = ('_k',
                 '_subset',
                 '_guaranteed_bound',
                 '_achieved_count',
                 '_method',
                 '_valid_precondition',
                 '_seed',
                 '_pairs',
                 '_tree',
                 '_subdivision',
                 )

    ### INITIALISER ###

    def __init__(self,
                 *,
                 k: int,
                 subset: tuple,
                 guaranteed_bound: int,
                 achieved_count: Optional[int],
                 method: str,
                 valid_precondition: bool,
                 seed: Optional[int] = None,
                 pairs: tuple = (),
                 tree: Any = None,
                 subdivision: Any = None,
                 ) -> None:
        r'Initialises self.'
        if method not in ('chain', 'tree'):
            raise ValueError("'method' must be 'chain' or 'tree'")
        if not isinstance(valid_precondition, bool):
            raise TypeError("'valid_precondition' must be 'bool'")
        subset = tuple(int(element) for element in subset)
        if len(subset) != k:
            raise ValueError(f"'subset' must have size {k}")
        self._k = k
        self._subset = subset
        self._guaranteed_bound = guaranteed_bound
        self._achieved_count = achieved_count
        self._method = method
        self._valid_precondition = valid_precondition
        self.seed = seed
        self._pairs = tuple(pairs)
        self._tree = tree
        self._subdivision = subdivision

    ### SPECIAL METHODS ###

    def __repr__(self) -> str:
        return (f'{type(self).__name__}(subset={self._subset}, '
                f'guaranteed_bound={self._guaranteed_bound}, '
                f'achieved_count={self._achieved_count})')

    ### PUBLIC METHODS ###

    def to_dict(self) -> dict:
        return {'k': self._k,
                'guaranteed_bound': self._guaranteed_bound,
                'achieved_count': self._achieved_count,
                'witness': list(self._subset),
                'method': self._method,
                'valid_precondition': self._valid_precondition,
                'seed': self._seed,
                }

    def write(self, path: str) -> None:
        r'Writes the witness certificate to a JSON file.'
        with open(path, 'w') as file:
            json.dump(self.to_dict(), file, indent=2)

    ### PUBLIC PROPERTIES ###

    @property
    def k(self) -> int:
        return self._k

    @property
    def subset(self) -> tuple:
        r'The extracted k-subset, sorted.'
        return self._subset

    @property
    def guaranteed_bound(self) -> int:
        r'Patterns the family may induce at most when the precondition holds.'
        return self._guaranteed_bound

    @property
    def achieved_count(self) -> Optional[int]:
        r'Patterns the family induces on :attr:`subset`.'
        return self._achieved_count

    @property
    def method(self) -> str:
        return self._method

    @property
    def valid_precondition(self) -> bool:
        r'Whether the ground set was large enough for the guarantee.'
        return self._valid_precondition

    @property
    def seed(self) -> Optional[int]:
        r"""Seed of the random family the witness was extracted from,
        ``None`` for a family read from a file.
        """
        return self._seed

    @seed.setter
    def seed(self,
             seed: Optional[int],
             ) -> None:
        if seed is not None and (not isinstance(seed, int)
                                 or isinstance(seed, bool)):
            raise TypeError("'seed' must be 'int' or 'None'")
        self._seed = seed

    @property
    def pairs(self) -> tuple:
        r'Ordered pairs of the chain, outermost first.'
        return self._pairs

    @property
    def tree(self) -> Any:
        return self._tree

    @property
    def subdivision(self) -> Any:
        return self._subdivision

    @property
    def holds(self) -> bool:
        r'Whether the achieved count stays within the guaranteed bound.'
        return (self._achieved_count is not None
                and self._achieved_count <= self._guaranteed_bound)
