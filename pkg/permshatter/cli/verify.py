from typing import Optional

import click

from ._common import (
    EXIT_FAIL,
    POWER_INT,
    handle_errors,
    lex_certificate,
    read_family,
    write_json,
)
from .construct import certify


@click.command('verify')
@click.option('--family', '-f', 'family_path', required=True,
              type=click.Path(exists=True, dir_okay=False),
              help='Family file (permutation or cube family).')
@click.option('--k', 'k', type=click.IntRange(min=1), required=True)
@click.option('--t', 't', type=click.IntRange(min=1), required=True)
@click.option('--mode',
              type=click.Choice(('auto', 'exhaustive', 'sampled', 'lex')),
              default='exhaustive', show_default=True)
@click.option('--samples', type=POWER_INT, default=None)
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--weight', type=click.IntRange(min=1), default=None,
              help='Weight cap of the lex check (lex mode only).')
@click.option('--subset-budget', type=POWER_INT, default=None,
              envvar='PERMSHATTER_SUBSET_BUDGET', show_envvar=True)
@click.option('--constraint-budget', type=POWER_INT, default=None,
              envvar='PERMSHATTER_CONSTRAINT_BUDGET', show_envvar=True)
@click.option('--certificate', '-c', default='-', show_default=True,
              type=click.Path(dir_okay=False, writable=True, allow_dash=True),
              help='Certificate file to write.')
@click.pass_obj
@handle_errors
def verify_command(settings,
                   family_path: str,
                   k: int,
                   t: int,
                   mode: str,
                   samples: Optional[int],
                   seed: int,
                   weight: Optional[int],
                   subset_budget: Optional[int],
                   constraint_budget: Optional[int],
                   certificate: str,
                   ) -> None:
    """Certify that a family file t-shatters every k-subset."""
    family = read_family(family_path)
    if mode == 'lex' and weight is not None:
        result = lex_certificate(family,
                                 k,
                                 t,
                                 weight=weight,
                                 budget=constraint_budget,
                                 samples=samples,
                                 seed=seed,
                                 )
    else:
        result = certify(family,
                         k,
                         t,
                         mode,
                         seed=seed,
                         samples=samples,
                         subset_budget=subset_budget,
                         constraint_budget=constraint_budget,
                         jobs=settings.jobs,
                         progress=settings.progress,
                         )
    write_json(certificate, result.to_dict())
    if not result.passed:
        click.get_current_context().exit(EXIT_FAIL)
