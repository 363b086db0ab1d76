from typing import Optional

import click

from ..core.PermFamily import PermFamily
from ..utilities.adversaries.chain_witness import chain_witness
from ..utilities.adversaries.tree_witness import tree_witness
from ._common import (
    EXIT_FAIL,
    EXIT_PRECONDITION,
    POWER_INT,
    handle_errors,
    read_family,
    write_json,
)


@click.command('adversary')
@click.option('--family', '-f', 'family_path', default=None,
              type=click.Path(exists=True, dir_okay=False),
              help='Family file (permutation or cube family).')
@click.option('--random', 'members', type=click.IntRange(min=1),
              default=None,
              help='Draw this many random permutations instead of reading '
                   '--family.')
@click.option('--n', 'n', type=POWER_INT, default=None,
              help='Ground set size of the random family.')
@click.option('--seed', type=int, default=0, show_default=True,
              help='Seed of the random family, recorded in the witness.')
@click.option('--method', type=click.Choice(('chain', 'tree')),
              required=True)
@click.option('--k', 'k', type=click.IntRange(min=1), required=True)
@click.option('--best-effort', is_flag=True,
              help='Run below the ground-set size the guarantee needs.')
@click.option('--output', '-o', default='-', show_default=True,
              type=click.Path(dir_okay=False, writable=True, allow_dash=True),
              help='Witness file to write.')
@click.option('--tree-dump', default=None,
              type=click.Path(dir_okay=False, writable=True),
              help='Write per-vertex fragment sizes and colours (tree '
                   'method).')
@handle_errors
def adversary_command(family_path: Optional[str],
                      members: Optional[int],
                      n: Optional[int],
                      seed: int,
                      method: str,
                      k: int,
                      best_effort: bool,
                      output: str,
                      tree_dump: Optional[str],
                      ) -> None:
    """Extract a k-subset the family shatters poorly.

    The family is read from --family, or drawn with --random M --n N as M
    uniformly random permutations of [N] from --seed.

    Exits with 4 when the ground set is too small for the guarantee (the
    witness is still written under --best-effort) and with 1 when the
    family induces more patterns on the witness than guaranteed.
    """
    if (family_path is None) == (members is None):
        raise click.UsageError('give exactly one of --family and --random')
    if members is not None:
        if n is None:
            raise click.UsageError('--random needs --n')
        family = PermFamily.random(n, members, seed=seed)
    else:
        family = read_family(family_path)
    extract = chain_witness if method == 'chain' else tree_witness
    witness = extract(family, k, best_effort=best_effort)
    if members is not None:
        witness.seed = seed
    write_json(output, witness.to_dict())
    if tree_dump is not None and witness.tree is not None:
        write_json(tree_dump, witness.tree.to_dict())
    click.echo(f'{method} witness {list(witness.subset)}: '
               f'{witness.achieved_count} patterns, guaranteed at most '
               f'{witness.guaranteed_bound}', err=True)
    if not witness.valid_precondition:
        click.get_current_context().exit(EXIT_PRECONDITION)
    if not witness.holds:
        click.get_current_context().exit(EXIT_FAIL)
