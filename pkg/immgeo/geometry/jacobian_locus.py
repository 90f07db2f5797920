"""
Components W_{alpha,r} of the (n-2)-nd Jacobian locus

W_{alpha,r} consists of the points supported on (X_{alpha-1}, X_alpha) with
rk X_{alpha-1} <= r, rk X_alpha <= q - r and X_alpha X_{alpha-1} = 0. Since
W_{alpha-1,0} = W_{alpha,q}, the labels with 1 <= r <= q enumerate every
component exactly once.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from immgeo.algebra.linalg import exact_rank, matrix_from_rows
from immgeo.algebra.matrix import ExactMatrix
from immgeo.config.settings import get_config
from immgeo.geometry.imm_poly import MatTuple, jac_n2_residuals
from immgeo.utils.errors import InputError, VerificationFailure
from immgeo.utils.logger import Logger
from immgeo.utils.sampling import make_rng, random_rational_grid
from immgeo.utils.validators import validate_dimensions, validate_range


def _require_n3(n: int, q: int) -> None:
    validate_dimensions(n, q)
    if n < 3:
        raise InputError(f"the (n-2)-nd Jacobian locus is only defined here for n >= 3, got n={n}")


def jac_dimension(q: int, r: int) -> int:
    """q^2 + rq - r^2"""
    validate_range(r, 0, q, "r")
    return q * q + r * q - r * r


def canonical_label(alpha: int, r: int, n: int, q: int) -> Tuple[int, int]:
    """(alpha, 0) names the same component as (alpha + 1, q)"""
    validate_range(r, 0, q, "r")
    alpha = (alpha - 1) % n + 1
    if r == 0:
        return alpha % n + 1, q
    return alpha, r


def jac_representative(alpha: int, r: int, n: int, q: int) -> MatTuple:
    """
    X_{alpha-1} = diag(I_r, 0) and X_alpha with I_{q-r} in its last q - r
    columns, top rows; every other block zero
    """
    _require_n3(n, q)
    validate_range(r, 0, q, "r")
    source = ExactMatrix.from_sparse(q, q, {(i, i): 1 for i in range(r)})
    target = ExactMatrix.from_sparse(q, q, {(i, r + i): 1 for i in range(q - r)})
    point = MatTuple.zeros(n, q)
    return point.replace(alpha - 1, source).replace(alpha, target)


def satisfies_component(point: MatTuple, alpha: int, r: int) -> Tuple[bool, Optional[str]]:
    """
    Membership in W_{alpha,r}

    Returns:
        (True, None), or (False, first violated condition)
    """
    n = point.n
    support = {(alpha - 2) % n, (alpha - 1) % n}
    for index, block in enumerate(point.matrices):
        if index not in support and not block.is_zero():
            return False, f"X{index + 1} != 0"
    source, target = point.block(alpha - 1), point.block(alpha)
    if exact_rank(source) > r:
        return False, f"rk X{(alpha - 2) % n + 1} > {r}"
    if exact_rank(target) > point.q - r:
        return False, f"rk X{(alpha - 1) % n + 1} > {point.q - r}"
    if not (target @ source).is_zero():
        return False, f"X{(alpha - 1) % n + 1} X{(alpha - 2) % n + 1} != 0"
    return True, None


@dataclass(frozen=True)
class JacComponent:
    alpha: int
    r: int
    dim: int
    representative: MatTuple

    @property
    def label(self) -> str:
        return f"W({self.alpha},{self.r})"


def jac_components(n: int, q: int) -> List[JacComponent]:
    """
    The nq components, canonically labelled, with verified representatives

    Raises:
        InputError: If n < 3
        VerificationFailure: If a representative leaves the locus
    """
    _require_n3(n, q)
    components = []
    for alpha in range(1, n + 1):
        for r in range(1, q + 1):
            representative = jac_representative(alpha, r, n, q)
            if any(jac_n2_residuals(representative)):
                raise VerificationFailure(f"W({alpha},{r}) representative has nonzero residuals")
            components.append(JacComponent(alpha, r, jac_dimension(q, r), representative))
    Logger.info(f"jacobian locus n={n}, q={q}: {len(components)} components")
    return components


def containment_violations(n: int, q: int) -> Dict[Tuple[Tuple[int, int], Tuple[int, int]], Optional[str]]:
    """For each ordered pair of distinct components, the condition of the second the first's representative violates"""
    components = jac_components(n, q)
    violations = {}
    for first in components:
        for second in components:
            if first is second:
                continue
            _, reason = satisfies_component(first.representative, second.alpha, second.r)
            violations[((first.alpha, first.r), (second.alpha, second.r))] = reason
    return violations


def jacobian_locus_dim(n: int, q: int) -> int:
    """max over r of q^2 + rq - r^2, attained at r = q // 2"""
    _require_n3(n, q)
    return max(jac_dimension(q, r) for r in range(q + 1))


# ---------- CHART ORACLE ----------
@dataclass(frozen=True)
class ChartPoint:
    """
    Chart of the bundle Im X in E in ker Y over Gr(r, q) with E the column
    span of [I_r; A]: X = [X'; A X'] and Y = [-Y2 A, Y2]
    """

    q: int
    r: int
    A: Tuple[Tuple[Fraction, ...], ...]
    X_top: Tuple[Tuple[Fraction, ...], ...]
    Y2: Tuple[Tuple[Fraction, ...], ...]

    @classmethod
    def random(cls, q: int, r: int, rng) -> "ChartPoint":
        def grid(rows, cols):
            return tuple(tuple(row) for row in random_rational_grid(rng, rows, cols))
        return cls(q, r, grid(q - r, r), grid(r, q), grid(q, q - r))

    @property
    def parameter_count(self) -> int:
        q, r = self.q, self.r
        return r * (q - r) + r * q + q * (q - r)

    def _offsets(self) -> Tuple[int, int]:
        q, r = self.q, self.r
        return r * (q - r), r * (q - r) + r * q

    def image(self) -> Tuple[ExactMatrix, ExactMatrix]:
        """(X, Y); Y X = 0 by construction"""
        q, r = self.q, self.r
        x = [[Fraction(0)] * q for _ in range(q)]
        y = [[Fraction(0)] * q for _ in range(q)]
        for j in range(q):
            for i in range(r):
                x[i][j] = self.X_top[i][j]
            for a in range(q - r):
                x[r + a][j] = sum((self.A[a][b] * self.X_top[b][j] for b in range(r)), Fraction(0))
        for i in range(q):
            for c in range(r):
                y[i][c] = -sum((self.Y2[i][a] * self.A[a][c] for a in range(q - r)), Fraction(0))
            for a in range(q - r):
                y[i][r + a] = self.Y2[i][a]
        return ExactMatrix.from_rows(x), ExactMatrix.from_rows(y)

    def jacobian(self) -> ExactMatrix:
        """
        First-order coefficients of (X, Y) in the parameters (A, X', Y2),
        one row per entry of X then Y
        """
        q, r = self.q, self.r
        x_offset, y_offset = self._offsets()

        def a_var(a, b):
            return a * r + b

        def x_var(b, j):
            return x_offset + b * q + j

        def y_var(i, a):
            return y_offset + i * (q - r) + a

        rows = []
        for i in range(q):
            for j in range(q):
                line: Dict[int, Fraction] = {}
                if i < r:
                    line[x_var(i, j)] = Fraction(1)
                else:
                    a = i - r
                    for b in range(r):
                        line[a_var(a, b)] = line.get(a_var(a, b), 0) + self.X_top[b][j]
                        line[x_var(b, j)] = line.get(x_var(b, j), 0) + self.A[a][b]
                rows.append(line)
        for i in range(q):
            for c in range(q):
                line = {}
                if c < r:
                    for a in range(q - r):
                        line[y_var(i, a)] = line.get(y_var(i, a), 0) - self.A[a][c]
                        line[a_var(a, c)] = line.get(a_var(a, c), 0) - self.Y2[i][a]
                else:
                    line[y_var(i, c - r)] = Fraction(1)
                rows.append(line)
        return matrix_from_rows(rows, self.parameter_count)


def jac_dim_oracle(q: int, r: int, seed: Optional[int] = None) -> int:
    """
    Rank of the chart Jacobian at a random chart point

    Points where the rank drops below the parameter count are resampled;
    the largest rank seen is returned.
    """
    validate_range(r, 0, q, "r")
    rng = make_rng(seed)
    best = 0
    for _ in range(get_config().SAMPLE_RETRIES):
        chart = ChartPoint.random(q, r, rng)
        best = max(best, exact_rank(chart.jacobian()))
        if best == chart.parameter_count:
            break
        Logger.debug(f"chart Jacobian rank {best} below {chart.parameter_count}; resampling")
    return best
