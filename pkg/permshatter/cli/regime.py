import math
from typing import Optional

import click

from ..utilities.exact.regime import regime
from ._common import handle_errors


@click.command('regime')
@click.option('--k', 'k', type=click.IntRange(min=3), required=True)
@click.option('--t', 't', type=click.IntRange(min=1), default=None,
              help='Target (default: the whole row, 1 to k!).')
@handle_errors
def regime_command(k: int, t: Optional[int]) -> None:
    """Print how the least family size grows with n for (k, t)."""
    targets = [t] if t is not None else range(1, math.factorial(k) + 1)
    click.echo('k,t,regime,growth')
    for target in targets:
        answer = regime(k, target)
        click.echo(f'{answer.k},{answer.t},{answer.regime},{answer.growth}')
