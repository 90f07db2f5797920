"""
eval command
"""
import click

from immgeo.cli import cli
from immgeo.cli.options import emit, output_options
from immgeo.services.eval_service import EvalService

# Initialize services
eval_service = EvalService()


@cli.command('eval')
@click.argument('point_file', type=click.Path(dir_okay=False))
@output_options
def eval_command(point_file, output_format, out):
    """Print IMM evaluated at the point stored in POINT_FILE"""
    emit(eval_service.evaluate_file(point_file), output_format, out)
