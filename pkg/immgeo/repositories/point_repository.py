"""
Point files: {"n": int, "q": int, "blocks": [[["p/q", ...], ...], ...]}
"""
from immgeo.geometry.imm_poly import MatTuple
from immgeo.models import PointFile, format_rational
from immgeo.repositories.base import BaseRepository


class PointRepository(BaseRepository[PointFile]):
    """Repository for rational points of V*"""

    def __init__(self):
        super().__init__(PointFile)

    def to_point(self, document: PointFile) -> MatTuple:
        return MatTuple.from_blocks(document.rational_blocks())

    def from_point(self, point: MatTuple) -> PointFile:
        return PointFile(n=point.n, q=point.q, blocks=serialize_blocks(point))

    def load_point(self, path) -> MatTuple:
        return self.to_point(self.load(path))


def serialize_blocks(point: MatTuple):
    """blocks[a-1][i-1][j-1] = entry (i, j) of X_a as "p/q" text"""
    return [
        [[format_rational(entry) for entry in row] for row in block.entries]
        for block in point.matrices
    ]
