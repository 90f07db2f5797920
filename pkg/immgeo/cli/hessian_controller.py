"""
hessian command
"""
from immgeo.cli import cli
from immgeo.cli.options import emit, run_options
from immgeo.services.hessian_service import HessianService

# Initialize services
hessian_service = HessianService()


@cli.command('hessian')
@run_options
def hessian_command(config, out):
    """Check H(p) against its closed-form inverse and compute dim of the dual"""
    emit(hessian_service.run(config), config.output_format, out)
