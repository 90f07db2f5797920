"""
symmetry command
"""
import click

from immgeo.cli import cli
from immgeo.cli.options import emit, run_options
from immgeo.config.settings import get_config
from immgeo.services.symmetry_service import SymmetryService

# Initialize services
symmetry_service = SymmetryService()


@cli.command('symmetry')
@run_options
@click.option('--words', type=click.IntRange(min=1), default=lambda: get_config().DEFAULT_WORDS,
              help='Number of random words in the generators')
@click.option('--inject-corrupted', is_flag=True, hidden=True)
def symmetry_command(config, out, words, inject_corrupted):
    """Run the symmetry suite; exits 1 if any check fails"""
    response = symmetry_service.run_suite(config, words=words, inject_corrupted=inject_corrupted)
    emit(response, config.output_format, out)
