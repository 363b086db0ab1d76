import logging
import time
from typing import Optional

import click
from tqdm import tqdm

from ..exceptions import PermShatterError
from ..records.BenchRecord import BenchRecord
from ._common import POWER_INT, handle_errors
from .construct import build_family, certify, guaranteed_t

logger = logging.getLogger(__name__)


def run_point(construction: str,
              n: int,
              k: int,
              seed: int,
              *,
              samples: Optional[int] = None,
              subset_budget: Optional[int] = None,
              constraint_budget: Optional[int] = None,
              jobs: int = 1,
              ) -> BenchRecord:
    r"""Builds and certifies one construction at one ``n``; failures end up
    in the ``error`` field of the record.
    """
    try:
        start = time.perf_counter()
        family = build_family(construction,
                              n,
                              k,
                              None,
                              seed,
                              constraint_budget=constraint_budget,
                              subset_budget=subset_budget,
                              samples=samples,
                              jobs=jobs,
                              )
        seconds = time.perf_counter() - start
        result = certify(family,
                         k,
                         guaranteed_t(construction, k, None),
                         'auto',
                         seed=seed,
                         samples=samples,
                         subset_budget=subset_budget,
                         constraint_budget=constraint_budget,
                         jobs=jobs,
                         )
    except (PermShatterError, TypeError, ValueError, RuntimeError,
            MemoryError) as error:
        logger.warning('%s at n=%d failed: %s', construction, n, error)
        return BenchRecord(n=n, construction=construction, error=str(error))
    logger.info('%s at n=%d: %d members in %.2fs', construction, n,
                len(family), seconds)
    return BenchRecord(n=n,
                       construction=construction,
                       family_size=len(family),
                       build_seconds=seconds,
                       verification_mode=result.mode,
                       passed=result.passed,
                       )


@click.command('bench')
@click.option('--construction', 'constructions', multiple=True,
              type=click.Choice(BenchRecord.CONSTRUCTIONS),
              help='Construction to sweep; repeat for several (default: '
                   'all).')
@click.option('--n', 'ns', type=POWER_INT, multiple=True,
              help='Sweep point, e.g. 2^16; repeat for several.')
@click.option('--k', 'k', type=click.IntRange(min=4), default=4,
              show_default=True)
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--samples', type=POWER_INT, default=None)
@click.option('--subset-budget', type=POWER_INT, default=None,
              envvar='PERMSHATTER_SUBSET_BUDGET', show_envvar=True)
@click.option('--constraint-budget', type=POWER_INT, default=None,
              envvar='PERMSHATTER_CONSTRAINT_BUDGET', show_envvar=True)
@click.option('--output', '-o', default='-', show_default=True,
              type=click.Path(dir_okay=False, writable=True, allow_dash=True),
              help='CSV file of bench records.')
@click.pass_obj
@handle_errors
def bench_command(settings,
                  constructions: tuple,
                  ns: tuple,
                  k: int,
                  seed: int,
                  samples: Optional[int],
                  subset_budget: Optional[int],
                  constraint_budget: Optional[int],
                  output: str,
                  ) -> None:
    """Sweep constructions over n and write family sizes as CSV."""
    constructions = constructions or BenchRecord.CONSTRUCTIONS
    points = [(construction, n) for construction in constructions
              for n in ns]
    records = [run_point(construction,
                         n,
                         k,
                         seed,
                         samples=samples,
                         subset_budget=subset_budget,
                         constraint_budget=constraint_budget,
                         jobs=settings.jobs,
                         )
               for construction, n in tqdm(points,
                                           disable=not settings.progress,
                                           desc='bench',
                                           )]
    with click.open_file(output, 'w') as stream:
        BenchRecord.write_csv(records, stream)
