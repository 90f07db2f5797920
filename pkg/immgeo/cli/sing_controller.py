"""
sing command
"""
from immgeo.cli import cli
from immgeo.cli.options import emit, run_options
from immgeo.services.sing_service import SingService

# Initialize services
sing_service = SingService()


@cli.command('sing')
@run_options
def sing_command(config, out):
    """Catalog of the irreducible components of the singular locus"""
    emit(sing_service.build_catalog(config), config.output_format, out)
