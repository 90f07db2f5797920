"""
Hessian service: H(p) against its closed-form inverse, and the dimension of
the dual variety
"""
from immgeo import __version__
from immgeo.algebra.rings import a_coefficient
from immgeo.geometry.hessian_dual import dual_dimension_report, hessian_unit_check, verify_hessian_inverse
from immgeo.models import ReportDocument, RunConfig, format_rational
from immgeo.utils.decorators import handles_toolkit_errors
from immgeo.utils.errors import DegenerateFormula
from immgeo.utils.logger import Logger
from immgeo.utils.response import success_response, verification_failure_response
from immgeo.utils.validators import validate_dimensions


class HessianService:
    """
    Service computing the Hessian checks for one (n, q)
    """

    @handles_toolkit_errors
    def run(self, config: RunConfig) -> tuple:
        """
        Verify H(p) C = I (or fall back to the unit check) and compute dim of the dual

        Returns:
            Tuple of (response_data, exit_code); exit code 1 if H(p) C != I
        """
        n, q = config.n, config.q
        validate_dimensions(n, q, min_n=2)
        report = ReportDocument(tool_version=__version__, config=config, command="hessian")

        if q >= 2:
            report.add("a_n", format_rational(a_coefficient(n, q)))
            self._check_inverse(report, n, q)
        else:
            report.add("H(p)", "skipped (q = 1)")

        dual = dual_dimension_report(n, q, config.trials, config.seed)
        report.add("hessian ranks", list(dual.ranks))
        report.add("dual dim", dual.dimension)
        report.add("dual is a hypersurface", "yes" if dual.is_hypersurface else "no")

        if not report.passed:
            return verification_failure_response(f"H(p) C != I for n={n}, q={q}", report)
        return success_response(report, "Hessian checks completed")

    def _check_inverse(self, report: ReportDocument, n: int, q: int) -> None:
        try:
            verified = verify_hessian_inverse(n, q)
        except DegenerateFormula as e:
            Logger.debug(f"closed form not applicable ({e}); falling back to the unit check")
            unit = hessian_unit_check(n, q)
            report.add("H(p)·C = I", f"closed form degenerate ({e})")
            report.add("unit check", "det H(p) is a unit" if unit else "det H(p) is not a unit")
            return
        Logger.info(f"H(p) C = I for n={n}, q={q}: {verified}")
        report.add("H(p)·C = I", "verified" if verified else "failed", verified)
