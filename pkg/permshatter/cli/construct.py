import logging
import math
from typing import Optional

import click

from ..config import DEFAULTS
from ..core.CubeFamily import CubeFamily
from ..core._patterns import ceil_log2
from ..utilities.constructions.build_loglog_family import build_loglog_family
from ..utilities.constructions.build_scrambling_family import (
    build_scrambling_family,
)
from ..utilities.constructions.build_sqrtlog_family import (
    build_sqrtlog_family,
)
from ..utilities.constructions.monotone_family import monotone_family
from ..utilities.inspections.verify_t_shattering import verify_t_shattering
from ._common import (
    EXIT_FAIL,
    POWER_INT,
    handle_errors,
    lex_certificate,
    within_budget,
    write_json,
)

logger = logging.getLogger(__name__)

KINDS = ('monotone', 'loglog', 'sqrtlog', 'scrambling')


def guaranteed_t(kind: str, k: int, t: Optional[int]) -> int:
    r'Number of patterns a construction guarantees on every k-subset.'
    if kind == 'monotone':
        return t
    h = ceil_log2(k)
    if kind == 'loglog':
        return 2 ** h
    if kind == 'sqrtlog':
        return min(2 * k, 2 ** h + 4)
    return math.factorial(k)


def build_family(kind: str,
                 n: int,
                 k: int,
                 t: Optional[int],
                 seed: int,
                 *,
                 constraint_budget: Optional[int] = None,
                 subset_budget: Optional[int] = None,
                 samples: Optional[int] = None,
                 max_retries: Optional[int] = None,
                 jobs: int = 1,
                 ):
    r'Dispatches to the construction of a given kind.'
    if kind == 'monotone':
        return monotone_family(n, t)
    if kind == 'scrambling':
        return build_scrambling_family(n,
                                       k,
                                       seed,
                                       samples=samples,
                                       budget=subset_budget,
                                       max_retries=max_retries,
                                       jobs=jobs,
                                       )
    builder = build_loglog_family if kind == 'loglog' else build_sqrtlog_family
    return builder(n,
                   k,
                   seed,
                   budget=constraint_budget,
                   samples=samples,
                   max_retries=max_retries,
                   )


def certify(family,
            k: int,
            t: int,
            mode: str,
            *,
            seed: int,
            samples: Optional[int],
            subset_budget: Optional[int],
            constraint_budget: Optional[int],
            jobs: int = 1,
            progress: bool = False,
            ):
    r"""Certifies a family in a given verification mode; ``'auto'`` runs the
    exhaustive scan within the subset budget, else the lex check for cube
    families and sampling otherwise.
    """
    if mode == 'auto':
        budget = subset_budget or DEFAULTS.subset_budget
        if within_budget(family.n, k, budget):
            mode = 'exhaustive'
        elif isinstance(family, CubeFamily):
            mode = 'lex'
        else:
            mode = 'sampled'
    if mode == 'lex':
        return lex_certificate(family,
                               k,
                               t,
                               budget=constraint_budget,
                               samples=samples,
                               seed=seed,
                               )
    return verify_t_shattering(family,
                               k,
                               t,
                               mode=mode,
                               samples=(samples or DEFAULTS.lex_samples
                                        if mode == 'sampled' else None),
                               seed=seed if mode == 'sampled' else None,
                               budget=subset_budget,
                               jobs=jobs,
                               progress=progress,
                               )


@click.command('construct')
@click.option('--kind', type=click.Choice(KINDS), required=True,
              help='Construction to run.')
@click.option('--n', 'n', type=POWER_INT, required=True,
              help='Ground set size, e.g. 64 or 2^32.')
@click.option('--k', 'k', type=click.IntRange(min=1), default=None,
              help='Subset size (default 2 for monotone).')
@click.option('--t', 't', type=click.IntRange(min=1), default=None,
              help='Target pattern count (default: what the kind '
                   'guarantees).')
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--verify-mode',
              type=click.Choice(('auto', 'exhaustive', 'sampled', 'lex')),
              default='auto', show_default=True)
@click.option('--samples', type=POWER_INT, default=None,
              help='Subsets or lex groups drawn by sampled checks.')
@click.option('--subset-budget', type=POWER_INT, default=None,
              envvar='PERMSHATTER_SUBSET_BUDGET', show_envvar=True)
@click.option('--constraint-budget', type=POWER_INT, default=None,
              envvar='PERMSHATTER_CONSTRAINT_BUDGET', show_envvar=True)
@click.option('--max-retries', type=click.IntRange(min=1), default=None,
              envvar='PERMSHATTER_MAX_RETRIES', show_envvar=True)
@click.option('--output', '-o', default='family.json', show_default=True,
              type=click.Path(dir_okay=False, writable=True),
              help='Family file to write.')
@click.option('--certificate', '-c', default='certificate.json',
              show_default=True,
              type=click.Path(dir_okay=False, writable=True),
              help='Certificate file to write.')
@click.pass_obj
@handle_errors
def construct_command(settings,
                      kind: str,
                      n: int,
                      k: Optional[int],
                      t: Optional[int],
                      seed: int,
                      verify_mode: str,
                      samples: Optional[int],
                      subset_budget: Optional[int],
                      constraint_budget: Optional[int],
                      max_retries: Optional[int],
                      output: str,
                      certificate: str,
                      ) -> None:
    """Build a family of permutations of [n] and certify it."""
    if kind == 'monotone':
        if t is None:
            raise click.UsageError('--t is required for --kind monotone')
        if k is None:
            k = min(2, n)
    elif k is None:
        raise click.UsageError(f'--k is required for --kind {kind}')
    target = guaranteed_t(kind, k, t)
    if t is None:
        t = target
    elif t > target:
        raise ValueError(f'--kind {kind} guarantees t = {target} for k = {k}, '
                         f'not {t}')
    family = build_family(kind,
                          n,
                          k,
                          t,
                          seed,
                          constraint_budget=constraint_budget,
                          subset_budget=subset_budget,
                          samples=samples,
                          max_retries=max_retries,
                          jobs=settings.jobs,
                          )
    family.write(output)
    logger.info('wrote %d members to %s', len(family), output)
    result = certify(family,
                     k,
                     t,
                     verify_mode,
                     seed=seed,
                     samples=samples,
                     subset_budget=subset_budget,
                     constraint_budget=constraint_budget,
                     jobs=settings.jobs,
                     progress=settings.progress,
                     )
    data = result.to_dict()
    data['parameters'] = {'kind': kind, 'n': n, 'k': k, 't': t,
                          'seed': seed, 'verify_mode': verify_mode}
    write_json(certificate, data)
    click.echo(f'{kind}: {len(family)} members on [{n}], {result.mode} '
               f'minimum {result.min_count} against t={t}: '
               f'{"passed" if result.passed else "FAILED"}')
    if not result.passed:
        click.get_current_context().exit(EXIT_FAIL)
