"""
Singular locus service: the component catalog of Sing(IMM = 0)
"""
from immgeo import __version__
from immgeo.geometry.quiver_sing import SingComponent, maximal_components
from immgeo.models import CatalogDocument, ComponentKind, ComponentRecord, RunConfig
from immgeo.repositories.point_repository import serialize_blocks
from immgeo.services.catalog_service import verify_catalog
from immgeo.utils.decorators import handles_toolkit_errors
from immgeo.utils.logger import Logger
from immgeo.utils.response import success_response, verification_failure_response
from immgeo.utils.validators import validate_dimensions


class SingService:
    """
    Service building the catalog of irreducible components of the singular locus
    """

    @handles_toolkit_errors
    def build_catalog(self, config: RunConfig) -> tuple:
        """
        Enumerate, certify and package every component

        Returns:
            Tuple of (CatalogDocument, exit_code); exit code 1 on any
            formula/oracle mismatch or failed re-verification
        """
        validate_dimensions(config.n, config.q)
        components = maximal_components(config.n, config.q)
        document = CatalogDocument(
            tool_version=__version__,
            config=config,
            kind=ComponentKind.SING,
            components=[self._record(c) for c in components],
            summary=self._summary(components),
        )
        failures = verify_catalog(document)
        if failures:
            return verification_failure_response(f"representatives failed re-verification: {failures}", document)
        Logger.info(f"sing catalog n={config.n} q={config.q}: {len(components)} components")
        return success_response(document, "singular locus catalog built")

    def _record(self, component: SingComponent) -> ComponentRecord:
        return ComponentRecord(
            kind=ComponentKind.SING,
            label=component.label,
            defining_data={
                "summands": [
                    {"start": i.start, "end": i.end, "multiplicity": m} for i, m in component.rep.summands
                ],
                "rank_matrix": [list(row) for row in component.rank_matrix.entries],
            },
            dim=component.dim_formula,
            dim_oracle=component.dim_oracle,
            representative=serialize_blocks(component.representative),
        )

    def _summary(self, components) -> dict:
        dims = sorted((c.dim_formula for c in components), reverse=True)
        return {
            "components": len(components),
            "dims": dims,
            "dim": dims[0] if dims else None,
        }
