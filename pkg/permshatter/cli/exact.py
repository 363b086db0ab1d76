import math
import os
from typing import Optional

import click

from ..records.ExactResult import ExactResult
from ..utilities.exact.f_exact import f_exact
from ._common import handle_errors


@click.command('exact')
@click.option('--n', 'ns', type=click.IntRange(min=1), multiple=True,
              required=True, help='Ground set size; repeat for a table.')
@click.option('--k', 'k', type=click.IntRange(min=1), required=True)
@click.option('--t', 'ts', type=click.IntRange(min=1), multiple=True,
              help='Target; repeat for several (default: 1 to k!).')
@click.option('--symmetry/--no-symmetry', default=True, show_default=True,
              help='Fix the first member to the identity.')
@click.option('--cap', type=click.IntRange(min=1), default=None,
              envvar='PERMSHATTER_EXACT_CAP', show_envvar=True,
              help='Largest n accepted.')
@click.option('--output', '-o', default='-', show_default=True,
              type=click.Path(dir_okay=False, writable=True, allow_dash=True),
              help='CSV table with the columns n,k,t,m.')
@click.option('--families', default=None,
              type=click.Path(file_okay=False, writable=True),
              help='Directory receiving one optimal family file per row.')
@click.pass_obj
@handle_errors
def exact_command(settings,
                  ns: tuple,
                  k: int,
                  ts: tuple,
                  symmetry: bool,
                  cap: Optional[int],
                  output: str,
                  families: Optional[str],
                  ) -> None:
    """Compute least family sizes exactly for tiny n."""
    ts = ts or tuple(range(1, math.factorial(k) + 1))
    results = []
    for n in ns:
        for t in ts:
            results.append(f_exact(n,
                                   k,
                                   t,
                                   cap=cap,
                                   symmetry=symmetry,
                                   jobs=settings.jobs,
                                   progress=settings.progress,
                                   ))
    if families is not None:
        os.makedirs(families, exist_ok=True)
        for result in results:
            name = f'f_{result.k}_{result.n}_{result.t}.json'
            result.optimal_family.write(os.path.join(families, name))
    with click.open_file(output, 'w') as stream:
        ExactResult.write_table(results, stream)
