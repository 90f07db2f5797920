"""
Symmetry service: invariance suite, Lie annihilation, characterization and
the marked Dynkin diagram stabilizer
"""
from fractions import Fraction
from typing import List

from immgeo import __version__
from immgeo.algebra.matrix import ExactMatrix
from immgeo.config.settings import get_config
from immgeo.geometry.imm_poly import MatTuple
from immgeo.geometry.symmetry import (
    Composite, CyclicShift, GroupElement, LieElement, SlotTranspose, TransposeReversal,
    characterization_sweep, check_invariance, dynkin_stabilizer, lie_annihilates,
    random_invertible, random_word, scalar_phi, standard_generators,
)
from immgeo.models import ReportDocument, RunConfig
from immgeo.utils.decorators import handles_toolkit_errors
from immgeo.utils.logger import Logger
from immgeo.utils.response import success_response, verification_failure_response
from immgeo.utils.sampling import make_rng
from immgeo.utils.validators import validate_dimensions, validate_positive_integer


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


class SymmetryService:
    """
    Service running the symmetry checks for one (n, q)
    """

    @handles_toolkit_errors
    def run_suite(self, config: RunConfig, words: int = None, inject_corrupted: bool = False) -> tuple:
        """
        Run every symmetry check and collect a report

        Args:
            config: Run parameters
            words: Number of random words in the generators
            inject_corrupted: Add SlotTranspose(1) to the generators

        Returns:
            Tuple of (response_data, exit_code); exit code 1 if any check fails
        """
        validate_dimensions(config.n, config.q)
        words = get_config().DEFAULT_WORDS if words is None else words
        validate_positive_integer(config.trials, "trials")
        validate_positive_integer(words, "words")
        report = ReportDocument(tool_version=__version__, config=config, command="symmetry")

        generators = self._generators(config, inject_corrupted)
        self._check_generators(report, generators, config)
        self._check_words(report, generators, config, words)
        self._check_dihedral_relations(report, config)
        self._check_lie_algebra(report, config)
        self._check_characterization(report, config)
        self._check_dynkin(report, config)

        Logger.info(f"symmetry suite n={config.n} q={config.q}: {'passed' if report.passed else 'FAILED'}")
        if not report.passed:
            failed = [c.check for c in report.checks if c.passed is False]
            return verification_failure_response(f"failed checks: {', '.join(failed)}", report)
        return success_response(report, "all symmetry checks passed")

    def _generators(self, config: RunConfig, inject_corrupted: bool) -> List[GroupElement]:
        rng = make_rng(config.seed)
        generators = standard_generators(config.n, config.q, rng)
        generators.append(scalar_phi(config.n, config.q, Fraction(3, 2)))
        if inject_corrupted:
            Logger.warning("injecting SlotTranspose(1) into the generator set")
            generators.append(SlotTranspose(1))
        return generators

    def _check_generators(self, report: ReportDocument, generators, config: RunConfig) -> None:
        for index, g in enumerate(generators):
            ok = check_invariance(g, config.n, config.q, config.trials, config.seed + index)
            report.add(f"invariance of {g.describe()}", _yes_no(ok), ok)

    def _check_words(self, report: ReportDocument, generators, config: RunConfig, words: int) -> None:
        rng = make_rng(config.seed)
        max_length = get_config().MAX_WORD_LENGTH
        failures = 0
        for index in range(words):
            length = int(rng.integers(1, max_length + 1))
            word = random_word(generators, length, rng)
            if not check_invariance(word, config.n, config.q, config.trials, config.seed + index):
                Logger.debug(f"word {index} ({word.describe()}) is not a symmetry")
                failures += 1
        report.add("random words invariant", f"{words - failures}/{words}", failures == 0)

    def _check_dihedral_relations(self, report: ReportDocument, config: RunConfig) -> None:
        rng = make_rng(config.seed)
        rho, tau = CyclicShift(1), TransposeReversal()
        rho_n = Composite([rho] * config.n)
        tau_rho_tau = Composite((tau, rho, tau))
        rho_inverse = CyclicShift(-1)
        ok = True
        for _ in range(config.trials):
            point = MatTuple.random(config.n, config.q, rng)
            if rho_n.apply(point) != point or tau_rho_tau.apply(point) != rho_inverse.apply(point):
                ok = False
                break
        report.add("rho^n = id and tau rho tau = rho^-1", _yes_no(ok), ok)

    def _check_lie_algebra(self, report: ReportDocument, config: RunConfig) -> None:
        n, q = config.n, config.q
        rng = make_rng(config.seed)
        ok = True
        for alpha in range(1, n + 1):
            for L in (ExactMatrix.identity(q), random_invertible(q, rng)):
                if not lie_annihilates(LieElement(alpha, L), n, q, config.trials, config.seed):
                    Logger.debug(f"Lie element at vertex {alpha} does not annihilate IMM")
                    ok = False
        report.add("gl(U_alpha) annihilates IMM", _yes_no(ok), ok)

        # without the X_{alpha-1} term the derivative must not vanish
        control = LieElement(1, ExactMatrix.identity(q))
        detected = not lie_annihilates(control, n, q, config.trials, config.seed, compensate=False)
        report.add("uncompensated vector field detected", _yes_no(detected), detected)

    def _check_characterization(self, report: ReportDocument, config: RunConfig) -> None:
        n, q = config.n, config.q
        sweep = characterization_sweep(n, q)
        diagonal = (1,) * n
        if diagonal not in sweep:
            report.add("invariant dimensions", "skipped (guard)")
            return
        others = {a: d for a, d in sweep.items() if a != diagonal}
        ok = sweep[diagonal] == 1 and not any(others.values())
        report.add(
            "invariant dimensions",
            f"(1^n): {sweep[diagonal]}, other multidegrees checked: {len(others)}, nonzero: "
            f"{sum(1 for d in others.values() if d)}",
            ok,
        )

    def _check_dynkin(self, report: ReportDocument, config: RunConfig) -> None:
        # the dihedral criterion is asserted from n = 3 on; smaller n are reported only
        n, q = config.n, config.q
        if q < 2:
            report.add("dynkin stabilizer", "skipped (q = 1)")
            return
        stabilizer = dynkin_stabilizer(n, q)
        report.add(
            "dynkin stabilizer order",
            f"{stabilizer.order} (dihedral: {_yes_no(stabilizer.is_dihedral)})",
        )
        if n < 3:
            return
        if q == 2:
            ok = stabilizer.image_order == 2 * n and stabilizer.image_is_dihedral
            report.add(
                "dynkin stabilizer image in S_n",
                f"{stabilizer.image_order} (dihedral: {_yes_no(stabilizer.image_is_dihedral)}, "
                f"flips trivial: {_yes_no(stabilizer.flips_trivial)})",
                ok,
            )
        else:
            ok = stabilizer.order == 2 * n and stabilizer.is_dihedral
            report.checks[-1].passed = ok
