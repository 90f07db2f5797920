"""
Evaluation of IMM at a point read from a point file
"""
from immgeo.geometry.imm_poly import evaluate
from immgeo.repositories.point_repository import PointRepository
from immgeo.utils.decorators import handles_toolkit_errors
from immgeo.utils.logger import Logger
from immgeo.utils.response import success_response
from immgeo.utils.serialization import serialize_scalar


class EvalService:
    """
    Service evaluating trace(X_n ... X_1) at user-supplied points
    """

    def __init__(self, repository: PointRepository = None):
        self.repository = repository or PointRepository()

    @handles_toolkit_errors
    def evaluate_file(self, path: str) -> tuple:
        """
        Evaluate IMM at the point stored in ``path``

        Returns:
            Tuple of (response_data, exit_code)
        """
        point = self.repository.load_point(path)
        value = evaluate(point)
        Logger.info(f"evaluated IMM at {path} (n={point.n}, q={point.q})")
        return success_response(
            {"n": point.n, "q": point.q, "value": serialize_scalar(value)},
            "IMM evaluated",
        )
