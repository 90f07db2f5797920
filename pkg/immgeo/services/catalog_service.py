"""
Re-verification of emitted component catalogs
"""
from typing import List

from immgeo.geometry.imm_poly import MatTuple, jac_n2_residuals
from immgeo.geometry.jacobian_locus import satisfies_component
from immgeo.geometry.quiver_sing import is_singular_point
from immgeo.models import CatalogDocument, ComponentKind, ComponentRecord, PointFile
from immgeo.repositories.catalog_repository import CatalogRepository
from immgeo.utils.errors import VerificationFailure
from immgeo.utils.logger import Logger


def record_point(record: ComponentRecord, n: int, q: int) -> MatTuple:
    document = PointFile(n=n, q=q, blocks=record.representative)
    return MatTuple.from_blocks(document.rational_blocks())


def _defect(record: ComponentRecord, point: MatTuple) -> str:
    if record.kind == ComponentKind.SING.value:
        return "" if is_singular_point(point) else "representative is not a singular point"
    if any(jac_n2_residuals(point)):
        return "representative has nonzero Jacobian residuals"
    data = record.defining_data
    _, reason = satisfies_component(point, data["alpha"], data["r"])
    return reason or ""


def verify_catalog(document: CatalogDocument) -> List[str]:
    """
    Re-parse a catalog from its JSON text and re-check every representative

    Returns:
        Labels of the components that fail, empty when all pass

    Raises:
        VerificationFailure: If the document does not survive a JSON round trip
    """
    repository = CatalogRepository()
    text = repository.dumps(document)
    reparsed = repository.parse(text, "catalog")
    if repository.dumps(reparsed) != text:
        raise VerificationFailure("catalog changed in a JSON round trip")
    n, q = reparsed.config.n, reparsed.config.q
    failures = []
    for record in reparsed.components:
        defect = _defect(record, record_point(record, n, q))
        if defect:
            Logger.error(f"{record.label}: {defect}")
            failures.append(record.label)
    Logger.debug(f"re-verified {len(reparsed.components)} catalog entries, {len(failures)} failures")
    return failures
