"""
Component catalogs and their flat CSV rendering
"""
import csv
import io
from typing import Dict, List, Optional

from immgeo.constants import CATALOG_CSV_COLUMNS
from immgeo.models import CatalogDocument
from immgeo.repositories.base import BaseRepository


class CatalogRepository(BaseRepository[CatalogDocument]):
    """Repository for singular-locus and Jacobian-locus catalogs"""

    def __init__(self):
        super().__init__(CatalogDocument)

    def to_rows(self, document: CatalogDocument) -> List[Dict[str, Optional[object]]]:
        return [
            {column: getattr(record, column) for column in CATALOG_CSV_COLUMNS}
            for record in document.components
        ]

    def to_csv(self, document: CatalogDocument) -> str:
        """One row per component: kind, label, dim, dim_oracle"""
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=CATALOG_CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in self.to_rows(document):
            writer.writerow({k: "" if v is None else v for k, v in row.items()})
        return buffer.getvalue()
