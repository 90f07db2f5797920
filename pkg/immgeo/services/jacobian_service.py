"""
Jacobian locus service: the components W(alpha, r) of the (n-2)-nd Jacobian locus
"""
from immgeo import __version__
from immgeo.geometry.jacobian_locus import (
    JacComponent, containment_violations, jac_components, jac_dim_oracle, jacobian_locus_dim,
)
from immgeo.models import CatalogDocument, ComponentKind, ComponentRecord, RunConfig
from immgeo.repositories.point_repository import serialize_blocks
from immgeo.services.catalog_service import verify_catalog
from immgeo.utils.decorators import handles_toolkit_errors
from immgeo.utils.logger import Logger
from immgeo.utils.response import success_response, verification_failure_response


class JacobianService:
    """
    Service building the W catalog with chart-rank dimension oracles
    """

    @handles_toolkit_errors
    def build_catalog(self, config: RunConfig) -> tuple:
        """
        Returns:
            Tuple of (CatalogDocument, exit_code); exit code 2 for n < 3,
            exit code 1 on a dimension mismatch, a missing separation of
            two components or a failed re-verification
        """
        components = jac_components(config.n, config.q)
        records = [self._record(c, config.seed) for c in components]
        mismatched = [r.label for r in records if r.dim_oracle != r.dim]

        unseparated = [
            f"W{first} in W{second}"
            for (first, second), reason in containment_violations(config.n, config.q).items()
            if reason is None
        ]
        document = CatalogDocument(
            tool_version=__version__,
            config=config,
            kind=ComponentKind.JACOBIAN,
            components=records,
            summary={
                "components": len(records),
                "dim": jacobian_locus_dim(config.n, config.q),
                "containments": unseparated,
            },
        )
        failures = verify_catalog(document)
        if mismatched or unseparated or failures:
            problems = {"dimension mismatches": mismatched, "containments": unseparated, "re-verification": failures}
            return verification_failure_response(f"jacobian catalog failed: {problems}", document)
        Logger.info(f"jacobian catalog n={config.n} q={config.q}: {len(records)} components")
        return success_response(document, "jacobian locus catalog built")

    def _record(self, component: JacComponent, seed: int) -> ComponentRecord:
        return ComponentRecord(
            kind=ComponentKind.JACOBIAN,
            label=component.label,
            defining_data={"alpha": component.alpha, "r": component.r},
            dim=component.dim,
            dim_oracle=jac_dim_oracle(component.representative.q, component.r, seed),
            representative=serialize_blocks(component.representative),
        )
