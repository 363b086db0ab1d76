"""permshatter command-line interface.

Commands:
    construct  Build a family and certify it.
    verify     Certify a family file.
    adversary  Extract a poorly shattered k-subset from a family file.
    exact      Solve tiny cases exactly and write them as CSV.
    regime     Print the growth regime of (k, t).
    bench      Sweep constructions over n and write a CSV.

Exit codes: 0 pass, 1 verification failed, 2 usage, 3 budget exceeded,
4 adversary precondition violated.
"""

import click

from .. import __version__
from ._common import Settings, configure_logging
from .adversary import adversary_command
from .bench import bench_command
from .construct import construct_command
from .exact import exact_command
from .regime import regime_command
from .verify import verify_command


@click.group()
@click.version_option(version=__version__)
@click.option('--jobs', '-j', type=click.IntRange(min=1), default=1,
              show_default=True, help='Worker processes for enumerations.')
@click.option('--verbose', '-v', count=True,
              help='-v for INFO, -vv for DEBUG logging.')
@click.option('--progress/--no-progress', default=False,
              help='Show progress bars on long enumerations.')
@click.pass_context
def main(ctx: click.Context, jobs: int, verbose: int, progress: bool) -> None:
    """Construct, verify and attack families of permutations that
    t-shatter every k-subset of [n].
    """
    configure_logging(verbose)
    ctx.obj = Settings(jobs=jobs, progress=progress)


main.add_command(construct_command)
main.add_command(verify_command)
main.add_command(adversary_command)
main.add_command(exact_command)
main.add_command(regime_command)
main.add_command(bench_command)
