"""
Hessian of IMM at the distinguished point p and the dimension of the dual variety

The point p has every X_alpha equal to diag(1, ..., 1, w) over
Q[t]/(t^n + q - 1), w the class of t. Rows of the Hessian follow the
(alpha, k, j) order and columns the (alpha, j, k) order, where (x_alpha)^j_k
is entry (j, k) of X_alpha; with these orderings every q^2 x q^2 block at p
is diagonal and the block pattern is cyclic Toeplitz.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from immgeo.algebra.linalg import det_division_free, exact_rank
from immgeo.algebra.matrix import ExactMatrix
from immgeo.algebra.rings import QuotientRing, a_coefficient, is_unit
from immgeo.config.settings import get_config
from immgeo.geometry.imm_poly import MatTuple, VarIndex, evaluate, gradient, second_partial
from immgeo.utils.errors import DegenerateFormula, NonUnitError, check_guard
from immgeo.utils.logger import Logger
from immgeo.utils.sampling import make_rng
from immgeo.utils.validators import validate_dimensions, validate_positive_integer


def segre_point(n: int, q: int) -> MatTuple:
    """p = (diag(1, ..., 1, w), ...); evaluate(p) = q - 1 + w^n = 0"""
    validate_dimensions(n, q, min_q=2)
    ring = QuotientRing(n, q)
    values = [ring.one()] * (q - 1) + [ring.generator()]
    block = ExactMatrix.diagonal_matrix(values, ring)
    return MatTuple(n, q, tuple(block for _ in range(n)), ring)


def row_position(var: VarIndex, q: int) -> int:
    return (var.alpha - 1) * q * q + (var.j - 1) * q + (var.i - 1)


def column_position(var: VarIndex, q: int) -> int:
    return (var.alpha - 1) * q * q + (var.i - 1) * q + (var.j - 1)


@dataclass(frozen=True)
class BlockHessian:
    """n x n grid of q^2 x q^2 blocks; blocks[(alpha, beta)] with 1-based vertices"""

    n: int
    q: int
    blocks: Dict[Tuple[int, int], ExactMatrix] = field(repr=False)

    def block(self, alpha: int, beta: int) -> ExactMatrix:
        n = self.n
        return self.blocks[((alpha - 1) % n + 1, (beta - 1) % n + 1)]

    @property
    def ring(self):
        return self.block(1, 1).ring

    def is_block_toeplitz(self) -> bool:
        """H^alpha_beta = H^1_{beta-alpha+1} for every pair"""
        return all(
            self.block(a, b) == self.block(1, b - a + 1)
            for a in range(1, self.n + 1) for b in range(1, self.n + 1)
        )

    def all_blocks_diagonal(self) -> bool:
        return all(block.is_diagonal() for block in self.blocks.values())

    @classmethod
    def from_first_row(cls, n: int, q: int, first_row: List[ExactMatrix]) -> "BlockHessian":
        """Cyclic extension X^alpha_beta = X^1_{beta-alpha+1}"""
        blocks = {
            (a, b): first_row[(b - a) % n]
            for a in range(1, n + 1) for b in range(1, n + 1)
        }
        return cls(n, q, blocks)


def hessian_matrix(point: MatTuple, guard: Optional[int] = None) -> ExactMatrix:
    """
    The full n q^2 x n q^2 Hessian in the row/column orderings above

    Raises:
        GuardExceeded: If n q^2 is beyond the Hessian guard
    """
    n, q = point.n, point.q
    size = n * q * q
    check_guard("Hessian size n*q^2", size, get_config().HESSIAN_GUARD if guard is None else guard)
    zero = point.ring.zero()
    grid = [[zero] * size for _ in range(size)]
    variables = [
        VarIndex(alpha, i, j)
        for alpha in range(1, n + 1) for i in range(1, q + 1) for j in range(1, q + 1)
    ]
    for u in variables:
        row = row_position(u, q)
        for v in variables:
            if v.alpha == u.alpha:
                continue
            value = second_partial(point, u, v)
            if value:
                grid[row][column_position(v, q)] = value
    return ExactMatrix(size, size, tuple(tuple(line) for line in grid), point.ring)


def hessian_at(point: MatTuple, guard: Optional[int] = None) -> BlockHessian:
    """Hessian of IMM at a point, cut into q^2 x q^2 blocks"""
    n, q = point.n, point.q
    full = hessian_matrix(point, guard)
    width = q * q
    blocks = {}
    for a in range(n):
        for b in range(n):
            entries = tuple(
                full.entries[a * width + i][b * width:(b + 1) * width] for i in range(width)
            )
            blocks[(a + 1, b + 1)] = ExactMatrix(width, width, entries, point.ring)
    return BlockHessian(n, q, blocks)


def displayed_hessian_block(n: int, q: int, beta: int, k: int) -> Tuple:
    """
    Diagonal of the k-th q x q sub-block of H^1_beta(p)

    Zero for beta = 1; otherwise (1, ..., 1, w^{beta-2}) when k != q and
    (w^{n-beta}, ..., w^{n-beta}, w^{n-2}) when k = q.
    """
    ring = QuotientRing(n, q)
    w = ring.generator()
    if beta == 1:
        return tuple(ring.zero() for _ in range(q))
    if k != q:
        return tuple([ring.one()] * (q - 1) + [w ** (beta - 2)])
    return tuple([w ** (n - beta)] * (q - 1) + [w ** (n - 2)])


def _check_closed_form(n: int, q: int) -> Tuple[Fraction, Fraction]:
    if n < 3:
        raise DegenerateFormula(f"closed-form inverse needs n >= 3, got n={n}")
    a_n = a_coefficient(n, q)
    if a_n == 0:
        raise DegenerateFormula(f"a_n = 0 for n={n}, q={q}")
    return a_n, a_coefficient(n - 1, q)


def inverse_block_diagonal(n: int, q: int, beta: int, k: int) -> Tuple:
    """
    Diagonal of the k-th q x q sub-block of C^1_beta

    Raises:
        DegenerateFormula: If n < 3 or a_n = 0
    """
    a_n, a_prev = _check_closed_form(n, q)
    ring = QuotientRing(n, q)
    w = ring.generator()
    sign = Fraction((-1) ** n)
    if beta == 1 and k != q:
        inner = ring.constant(Fraction(-(n - 2), n - 1))
        last = (a_prev / a_n) * w
    elif beta == 1:
        inner = (a_prev / a_n) * w
        last = w ** 2 * Fraction(n - 2, (q - 1) * (n - 1))
    elif k != q:
        inner = ring.constant(Fraction(1, n - 1))
        last = (sign / a_n) * w ** ((n - 1) * (n - beta))
    else:
        inner = (sign / a_n) * w ** ((n - 1) * (beta - 2))
        last = w ** 2 * Fraction(-1, (q - 1) * (n - 1))
    return tuple([inner] * (q - 1) + [last])


def closed_form_inverse(n: int, q: int) -> BlockHessian:
    """
    The candidate inverse C of H(p), cyclic in its blocks

    Raises:
        DegenerateFormula: If n < 3 or a_n = 0 (q = 2 with n odd)
    """
    _check_closed_form(n, q)
    ring = QuotientRing(n, q)
    first_row = []
    for beta in range(1, n + 1):
        diagonal = []
        for k in range(1, q + 1):
            diagonal.extend(inverse_block_diagonal(n, q, beta, k))
        first_row.append(ExactMatrix.diagonal_matrix(diagonal, ring))
    return BlockHessian.from_first_row(n, q, first_row)


def verify_hessian_inverse(n: int, q: int) -> bool:
    """
    H(p) C = I, computed blockwise as
    R^alpha_beta = sum_gamma H^1_{gamma-alpha+1}(p) C^1_{beta-gamma+1}

    Raises:
        DegenerateFormula: Propagated from closed_form_inverse
    """
    inverse = closed_form_inverse(n, q)
    hessian = hessian_at(segre_point(n, q))
    ring = hessian.ring
    identity = ExactMatrix.identity(q * q, ring)
    zero = ExactMatrix.zeros(q * q, q * q, ring)
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            total = zero
            for c in range(1, n + 1):
                total = total + hessian.block(1, c - a + 1) @ inverse.block(1, b - c + 1)
            if total != (identity if a == b else zero):
                Logger.info(f"H(p) C differs from the identity in block ({a}, {b}) for n={n}, q={q}")
                return False
    return True


def hessian_unit_check(n: int, q: int) -> bool:
    """det H(p), computed without division, is a unit of Q[t]/(t^n + q - 1)"""
    hessian = hessian_matrix(segre_point(n, q))
    determinant = det_division_free(hessian)
    unit, _ = is_unit(determinant)
    Logger.debug(f"det H(p) for n={n}, q={q}: {determinant} (unit: {unit})")
    return unit


def sample_hypersurface_point(n: int, q: int, seed: Optional[int] = None, rng=None) -> MatTuple:
    """
    Random rational point with evaluate = 0 and nonzero gradient

    IMM is linear in X_1: IMM = sum X_1[i][j] Q[j][i] with Q = X_n ... X_2.
    One entry of X_1 with a nonzero coefficient is solved for.

    Raises:
        NonUnitError: If no admissible point is found within the retry budget
    """
    validate_dimensions(n, q)
    rng = rng if rng is not None else make_rng(seed)
    retries = get_config().SAMPLE_RETRIES
    for _ in range(retries):
        point = MatTuple.random(n, q, rng)
        coefficient = point.chains.omitting(0)
        solvable = [
            (i, j) for i in range(q) for j in range(q) if coefficient[j, i]
        ]
        if not solvable:
            Logger.debug("resampling: IMM does not depend on X1 at this point")
            continue
        i, j = solvable[0]
        cleared = point.replace(1, point.block(1).with_entry(i, j, 0))
        value = -evaluate(cleared) / coefficient[j, i]
        candidate = point.replace(1, point.block(1).with_entry(i, j, value))
        if evaluate(candidate) != 0:
            raise ValueError("hypersurface sampler produced a point off the hypersurface")
        if all(block.is_zero() for block in gradient(candidate)):
            Logger.debug("resampling: singular hypersurface point")
            continue
        return candidate
    raise NonUnitError(f"no smooth hypersurface point after {retries} draws")


@dataclass(frozen=True)
class DualDimensionReport:
    n: int
    q: int
    ranks: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return max(self.ranks) - 2

    @property
    def is_hypersurface(self) -> bool:
        return self.dimension == self.n * self.q * self.q - 2


def dual_dimension_report(n: int, q: int, trials: int = None, seed: Optional[int] = None,
                          guard: Optional[int] = None) -> DualDimensionReport:
    """
    Exact Hessian ranks at sampled smooth hypersurface points

    Raises:
        InputError: If n < 2
        GuardExceeded: If n q^2 is beyond the Hessian guard
    """
    validate_dimensions(n, q, min_n=2)
    check_guard("Hessian size n*q^2", n * q * q, get_config().HESSIAN_GUARD if guard is None else guard)
    trials = get_config().DEFAULT_TRIALS if trials is None else trials
    validate_positive_integer(trials, "trials")
    rng = make_rng(seed)
    ranks = []
    for _ in range(trials):
        point = sample_hypersurface_point(n, q, rng=rng)
        ranks.append(exact_rank(hessian_matrix(point, guard)))
        if ranks[-1] == n * q * q:
            break
    Logger.debug(f"Hessian ranks for n={n}, q={q}: {ranks}")
    return DualDimensionReport(n, q, tuple(ranks))


def dual_dimension(n: int, q: int, trials: int = None, seed: Optional[int] = None,
                   guard: Optional[int] = None) -> int:
    """max rank of the Hessian over sampled hypersurface points, minus 2"""
    return dual_dimension_report(n, q, trials, seed, guard).dimension
