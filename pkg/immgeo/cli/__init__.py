"""
Command line package - the click group and its commands
"""
import click

from immgeo import __version__
from immgeo.utils.logger import Logger

LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']


@click.group()
@click.version_option(__version__, prog_name='immgeo')
@click.option('--log-level', type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None,
              help='Override IMMGEO_LOG_LEVEL for this run (logs go to stderr)')
def cli(log_level):
    """Exact computations on the iterated matrix multiplication polynomial"""
    if log_level:
        Logger.set_level(log_level)


# Import controllers to register commands
from immgeo.cli import eval_controller, symmetry_controller, hessian_controller, sing_controller, jacobian_controller
