"""
jacobian command
"""
from immgeo.cli import cli
from immgeo.cli.options import emit, run_options
from immgeo.services.jacobian_service import JacobianService

# Initialize services
jacobian_service = JacobianService()


@cli.command('jacobian')
@run_options
def jacobian_command(config, out):
    """Catalog of the components of the (n-2)-nd Jacobian locus (n >= 3)"""
    emit(jacobian_service.build_catalog(config), config.output_format, out)
