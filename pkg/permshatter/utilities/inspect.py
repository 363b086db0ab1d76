from typing import Optional, Union

from ..core._FamilyParent import _FamilyParent
from ..records.LexShatterReport import LexShatterReport
from ..records.ShatterCertificate import ShatterCertificate
from ..records.Witness import Witness
from ..trees.OrderedPair import OrderedPair
from .adversaries.chain_witness import chain_witness
from .adversaries.ordered_pair import ordered_pair
from .adversaries.tree_witness import tree_witness
from .constructions.verify_k_lex_shattering import verify_k_lex_shattering
from .inspections.count_induced import count_induced
from .inspections.min_shatter import min_shatter
from .inspections.verify_t_shattering import verify_t_shattering


class Inspection:
    r"""Inspection agent bound to a family: every oracle and adversary that
    takes a family as first argument is available as a method.

    Example:

        >>> family = permshatter.monotone_family(8, 2)
        >>> permshatter.inspect(family)
        Inspection(client=PermFamily(n=8, size=2))
        >>> permshatter.inspect(family).count_induced([1, 4, 6])
        2
        >>> permshatter.inspect(family).min_shatter(3)
        (2, (1, 2, 3))
    """

    ### CLASS VARIABLES ###

    __slots__ = ('_client',)

    ### INITIALISER ###

    def __init__(self, client: _FamilyParent) -> None:
        r'Initialises self.'
        if not isinstance(client, _FamilyParent):
            raise TypeError("must be 'PermFamily' or 'CubeFamily': "
                            f"(not {client!r}).")
        self._client = client

    ### SPECIAL METHODS ###

    def __repr__(self) -> str:
        r'Gets interpreter representation.'
        return f'{type(self).__name__}(client={self._client!r})'

    ### PUBLIC METHODS ###

    def count_induced(self, subset: Union[list, tuple, set]) -> int:
        return count_induced(self._client, subset)

    def min_shatter(self,
                    k: int,
                    *,
                    budget: Optional[int] = None,
                    jobs: int = 1,
                    progress: bool = False,
                    ) -> tuple:
        return min_shatter(self._client,
                           k,
                           budget=budget,
                           jobs=jobs,
                           progress=progress,
                           )

    def verify_t_shattering(self,
                            k: int,
                            t: int,
                            *,
                            mode: str = 'exhaustive',
                            samples: Optional[int] = None,
                            seed: Optional[int] = None,
                            budget: Optional[int] = None,
                            jobs: int = 1,
                            progress: bool = False,
                            ) -> ShatterCertificate:
        return verify_t_shattering(self._client,
                                   k,
                                   t,
                                   mode=mode,
                                   samples=samples,
                                   seed=seed,
                                   budget=budget,
                                   jobs=jobs,
                                   progress=progress,
                                   )

    def verify_k_lex_shattering(self,
                                k: int,
                                *,
                                weight: Optional[int] = None,
                                mode: str = 'auto',
                                samples: Optional[int] = None,
                                seed: int = 0,
                                budget: Optional[int] = None,
                                ) -> LexShatterReport:
        return verify_k_lex_shattering(self._client,
                                       k,
                                       weight=weight,
                                       mode=mode,
                                       samples=samples,
                                       seed=seed,
                                       budget=budget,
                                       )

    def ordered_pair(self,
                     ground: Union[list, tuple, set, range],
                     *,
                     best_effort: bool = False,
                     ) -> OrderedPair:
        return ordered_pair(self._client, ground, best_effort=best_effort)

    def chain_witness(self, k: int, *, best_effort: bool = False) -> Witness:
        return chain_witness(self._client, k, best_effort=best_effort)

    def tree_witness(self, k: int, *, best_effort: bool = False) -> Witness:
        return tree_witness(self._client, k, best_effort=best_effort)

    ### PUBLIC PROPERTIES ###

    @property
    def client(self) -> _FamilyParent:
        r'Gets client. Returns family.'
        return self._client


### METHOD DOCSTRINGS ###

Inspection.count_induced.__doc__ = count_induced.__doc__
Inspection.min_shatter.__doc__ = min_shatter.__doc__
Inspection.verify_t_shattering.__doc__ = verify_t_shattering.__doc__
Inspection.verify_k_lex_shattering.__doc__ = verify_k_lex_shattering.__doc__
Inspection.ordered_pair.__doc__ = ordered_pair.__doc__
Inspection.chain_witness.__doc__ = chain_witness.__doc__
Inspection.tree_witness.__doc__ = tree_witness.__doc__


### FUNCTIONS ###

def inspect(client: _FamilyParent) -> Inspection:
    r"""Makes an inspection agent. See :class:`Inspection` for the
    documentation of all of its methods.

    Example:

        >>> family = permshatter.monotone_family(8, 2)
        >>> permshatter.inspect(family).verify_t_shattering(4, 2).passed
        True
    """
    return Inspection(client)
