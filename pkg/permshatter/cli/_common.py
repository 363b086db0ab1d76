import functools
import json
import logging
import math
import re

import click

from ..core.CubeFamily import CubeFamily
from ..core.PermFamily import PermFamily
from ..core._patterns import ceil_log2
from ..exceptions import (
    BudgetExceededError,
    ConstructionError,
    PreconditionError,
)
from ..records.ShatterCertificate import ShatterCertificate
from ..utilities.constructions.build_pi import all_pis
from ..utilities.constructions.verify_k_lex_shattering import (
    verify_k_lex_shattering,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_PRECONDITION = 4

LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


class PowerInt(click.ParamType):
    r"""Integer parameter that also accepts powers written as ``2^36`` or
    ``2**36`` and underscores as digit separators.
    """

    name = 'integer'

    _POWER = re.compile(r'^\s*(\d+)\s*(?:\^|\*\*)\s*(\d+)\s*$')

    def convert(self, value, param, ctx):
        if isinstance(value, int):
            return value
        text = str(value).replace('_', '')
        match = self._POWER.match(text)
        if match is not None:
            return int(match.group(1)) ** int(match.group(2))
        try:
            return int(text)
        except ValueError:
            self.fail(f'{value!r} is not an integer or a power like 2^16',
                      param, ctx)


POWER_INT = PowerInt()


class Settings():
    r'Options of the command group shared by every subcommand.'

    __slots__ = ('jobs', 'progress')

    def __init__(self, jobs: int = 1, progress: bool = False) -> None:
        self.jobs = jobs
        self.progress = progress


def configure_logging(verbosity: int) -> None:
    level = LOG_LEVELS[min(verbosity, len(LOG_LEVELS) - 1)]
    logging.basicConfig(level=level,
                        format='%(levelname)s %(name)s: %(message)s',
                        force=True,
                        )


def handle_errors(function):
    r"""Turns the package exceptions raised by a command into the exit codes
    of the command-line interface.
    """
    @functools.wraps(function)
    def wrapper(*args, **kwargs):
        try:
            return function(*args, **kwargs)
        except BudgetExceededError as error:
            _abort(error, EXIT_BUDGET)
        except PreconditionError as error:
            _abort(error, EXIT_PRECONDITION)
        except ConstructionError as error:
            _abort(error, EXIT_FAIL)
        except (TypeError, ValueError) as error:
            _abort(error, EXIT_USAGE)
    return wrapper


def _abort(error: Exception, code: int) -> None:
    click.echo(f'Error: {error}', err=True)
    click.get_current_context().exit(code)


def read_family(path: str):
    r'Loads a permutation family file or a cube family file.'
    with click.open_file(path) as file:
        data = json.load(file)
    if not isinstance(data, dict):
        raise ValueError(f'{path} does not hold a family')
    if 'perms' in data:
        return PermFamily.from_dict(data)
    return CubeFamily.from_dict(data)


def write_json(path: str, data: dict) -> None:
    with click.open_file(path, 'w') as file:
        json.dump(data, file, indent=2)
        file.write('\n')


def lex_bound(family: CubeFamily, k: int, weight=None) -> int:
    r"""Number of patterns a passing lex check guarantees on every k-subset
    of ``family``: ``2^h`` with ``h = ceil(log2 k)``, raised to
    ``min(2k, 2^h + 4)`` when the family holds every π-permutation of its
    cube and the lex groups were checked up to weight
    ``max(k - 1, h + 2)``. Never more than ``k!``.
    """
    h = ceil_log2(k)
    bound = 2 ** h
    has_pis = set(family.pi_members) >= set(all_pis(family.b, family.d))
    if has_pis and (weight is None or weight >= max(k - 1, h + 2)):
        bound = min(2 * k, 2 ** h + 4)
    return min(bound, math.factorial(k))


def lex_certificate(family: CubeFamily,
                    k: int,
                    t: int,
                    *,
                    weight=None,
                    budget=None,
                    samples=None,
                    seed: int = 0,
                    ) -> ShatterCertificate:
    r"""Certificate of a cube family from its lex constraint check: the
    report recorded by the construction, or a fresh check of its lex
    members. A passing check certifies the count of :func:`lex_bound`, so
    the certificate fails whenever ``t`` asks for more than that.
    """
    if not isinstance(family, CubeFamily):
        raise ValueError("verification mode 'lex' needs a cube family")
    report = family.lex_report
    if report is None or report.k != k or weight is not None:
        report = verify_k_lex_shattering(family,
                                         k,
                                         weight=weight,
                                         budget=budget,
                                         samples=samples,
                                         seed=seed,
                                         )
    bound = lex_bound(family, k, report.weight)
    return ShatterCertificate(k=k,
                              t=t,
                              mode='lex',
                              min_count=bound if report.passed else 0,
                              n=family.n,
                              family_size=len(family),
                              )


def within_budget(n: int, k: int, budget: int) -> bool:
    return math.comb(n, k) <= budget
