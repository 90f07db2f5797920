"""
Points of V* = Mat_q^n and the polynomial IMM(X_1, ..., X_n) = trace(X_n ... X_1)

Conventions:
    * vertex indices are 1-based in the public API and reduced modulo n;
    * VarIndex(alpha, i, j) is entry (i, j) of X_alpha;
    * the product omitting X_alpha is X_{alpha-1} ... X_1 X_n ... X_{alpha+1}.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product as cartesian
from typing import Dict, List, Optional, Sequence, Tuple

from immgeo.algebra.linalg import matrix_from_rows, nullity
from immgeo.algebra.matrix import ExactMatrix
from immgeo.algebra.rings import RATIONALS, ScalarRing, common_ring
from immgeo.config.settings import get_config
from immgeo.utils.errors import check_guard
from immgeo.utils.sampling import random_rational_grid


@dataclass(frozen=True, order=True)
class VarIndex:
    """Coordinate (x_alpha)^i_j, all indices 1-based"""

    alpha: int
    i: int
    j: int

    def check(self, n: int, q: int) -> None:
        if not (1 <= self.alpha <= n and 1 <= self.i <= q and 1 <= self.j <= q):
            raise ValueError(f"{self} out of range for n={n}, q={q}")

    def __str__(self):
        return f"x{self.alpha}[{self.i},{self.j}]"


@dataclass(frozen=True)
class MatTuple:
    """A point (X_1, ..., X_n) of q x q matrices over one ring"""

    n: int
    q: int
    matrices: Tuple[ExactMatrix, ...]
    ring: ScalarRing = RATIONALS

    def __post_init__(self):
        if len(self.matrices) != self.n:
            raise ValueError(f"expected {self.n} matrices, got {len(self.matrices)}")
        for index, matrix in enumerate(self.matrices, start=1):
            if matrix.shape != (self.q, self.q):
                raise ValueError(f"X{index} has shape {matrix.shape}, expected {(self.q, self.q)}")
            if matrix.ring != self.ring:
                raise ValueError(f"X{index} lives in {matrix.ring}, expected {self.ring}")

    @classmethod
    def from_blocks(cls, blocks: Sequence, ring: ScalarRing = None) -> "MatTuple":
        """Build from ExactMatrix blocks or nested entry lists"""
        matrices = [
            block if isinstance(block, ExactMatrix) else ExactMatrix.from_rows(block, ring)
            for block in blocks
        ]
        if ring is None:
            ring = common_ring([m.ring.zero() for m in matrices])
        matrices = [
            m if m.ring == ring else ExactMatrix.from_rows(m.entries, ring) for m in matrices
        ]
        q = matrices[0].rows if matrices else 0
        return cls(len(matrices), q, tuple(matrices), ring)

    @classmethod
    def identity(cls, n: int, q: int, ring: ScalarRing = RATIONALS) -> "MatTuple":
        return cls(n, q, tuple(ExactMatrix.identity(q, ring) for _ in range(n)), ring)

    @classmethod
    def zeros(cls, n: int, q: int, ring: ScalarRing = RATIONALS) -> "MatTuple":
        return cls(n, q, tuple(ExactMatrix.zeros(q, q, ring) for _ in range(n)), ring)

    @classmethod
    def random(cls, n: int, q: int, rng) -> "MatTuple":
        """Random rational point from a seeded numpy Generator"""
        return cls.from_blocks([random_rational_grid(rng, q, q) for _ in range(n)], RATIONALS)

    def block(self, alpha: int) -> ExactMatrix:
        """X_alpha, 1-based, read modulo n"""
        return self.matrices[(alpha - 1) % self.n]

    def replace(self, alpha: int, matrix: ExactMatrix) -> "MatTuple":
        matrices = list(self.matrices)
        matrices[(alpha - 1) % self.n] = matrix
        return MatTuple(self.n, self.q, tuple(matrices), self.ring)

    def entry(self, var: VarIndex):
        return self.block(var.alpha)[var.i - 1, var.j - 1]

    @cached_property
    def chains(self) -> "ChainProducts":
        return ChainProducts(self)

    def __str__(self):
        return "(" + ", ".join(str(m) for m in self.matrices) + ")"


class ChainProducts:
    """
    Memoized cyclic segment products of one point

    ``segment(top, length)`` is X_top X_{top-1} ... X_{top-length+1} with
    0-based indices read modulo n; length 0 gives the identity.
    """

    def __init__(self, point: MatTuple):
        self.point = point
        self._segments: Dict[Tuple[int, int], ExactMatrix] = {}
        self._identity = ExactMatrix.identity(point.q, point.ring)

    def segment(self, top: int, length: int) -> ExactMatrix:
        n = self.point.n
        top %= n
        if length == 0:
            return self._identity
        key = (top, length)
        cached = self._segments.get(key)
        if cached is None:
            head = self.point.matrices[top]
            cached = head if length == 1 else head @ self.segment(top - 1, length - 1)
            self._segments[key] = cached
        return cached

    def omitting(self, alpha0: int) -> ExactMatrix:
        """X_{alpha-1} ... X_{alpha+1} for the 0-based vertex alpha0"""
        return self.segment(alpha0 - 1, self.point.n - 1)

    def full_cycle(self) -> ExactMatrix:
        """X_n ... X_1"""
        return self.segment(self.point.n - 1, self.point.n)


def evaluate(point: MatTuple):
    """trace(X_n X_{n-1} ... X_1)"""
    cycle = point.chains.full_cycle()
    total = point.ring.zero()
    for value in cycle.diagonal():
        total = total + value
    return total


def coordinate_expansion(n: int, q: int, guard: Optional[int] = None) -> List[Tuple[Tuple[VarIndex, ...], int]]:
    """
    The q^n monomials of IMM as cyclic chains of index contractions

    Each monomial is X_n[l_1][l_n] X_{n-1}[l_n][l_{n-1}] ... X_1[l_2][l_1],
    listed from X_n down to X_1, with coefficient 1.

    Raises:
        GuardExceeded: If q^n is beyond the monomial guard
    """
    guard = get_config().MONOMIAL_GUARD if guard is None else guard
    check_guard("monomial count q^n", q ** n, guard)
    expansion = []
    for labels in cartesian(range(1, q + 1), repeat=n):
        monomial = tuple(
            VarIndex(alpha, labels[alpha % n], labels[alpha - 1]) for alpha in range(n, 0, -1)
        )
        expansion.append((monomial, 1))
    return expansion


def evaluate_expansion(point: MatTuple, expansion) -> object:
    """Sum of the monomials of an expansion at a point"""
    total = point.ring.zero()
    for monomial, coefficient in expansion:
        term = point.ring.one() * coefficient
        for var in monomial:
            term = term * point.entry(var)
            if not term:
                break
        total = total + term
    return total


def gradient(point: MatTuple) -> List[ExactMatrix]:
    """
    First partials, one q x q block per vertex

    Block alpha (0-based list index alpha-1) holds at (i, j) the derivative
    by (x_alpha)^i_j, which is entry (j, i) of the product omitting X_alpha.
    """
    return [point.chains.omitting(a).transpose() for a in range(point.n)]


def second_partial(point: MatTuple, u: VarIndex, v: VarIndex):
    """
    Mixed second partial by u = (x_alpha)^j_k and v = (x_beta)^r_s

    Zero when alpha = beta. Otherwise the trace splits at the two removed
    slots into M1 = X_{alpha-1} ... X_{beta+1} and M2 = X_{beta-1} ... X_{alpha+1}
    and the value is M1[k][r] * M2[s][j]; an empty chain is the identity,
    so the adjacent cases reduce to Kronecker deltas.
    """
    n, q = point.n, point.q
    u.check(n, q)
    v.check(n, q)
    a, b = u.alpha - 1, v.alpha - 1
    if a == b:
        return point.ring.zero()
    chains = point.chains
    m1 = chains.segment(a - 1, (a - b - 1) % n)
    m2 = chains.segment(b - 1, (b - a - 1) % n)
    left = m1[u.j - 1, v.i - 1]
    if not left:
        return point.ring.zero()
    return left * m2[v.j - 1, u.i - 1]


def jac_n2_residuals(point: MatTuple) -> list:
    """
    Values of the two equation families of the (n-2)-nd Jacobian locus

    First every entry of X_{alpha+1} X_alpha for each alpha, then every
    product (x_beta)^t_s (x_alpha)^r_p for each non-adjacent pair alpha < beta.
    """
    n = point.n
    residuals = []
    for a in range(n):
        pair = point.matrices[(a + 1) % n] @ point.matrices[a]
        residuals.extend(value for row in pair.entries for value in row)
    for a in range(n):
        for b in range(a + 1, n):
            if (b - a) % n in (1, n - 1):
                continue
            left = [value for row in point.matrices[b].entries for value in row]
            right = [value for row in point.matrices[a].entries for value in row]
            residuals.extend(x * y for x in left for y in right)
    return residuals


def scalar_tuple_scaling(point: MatTuple, factors: Sequence) -> MatTuple:
    """(z_1 X_1, ..., z_n X_n); evaluate scales by the product of the z_alpha"""
    if len(factors) != point.n:
        raise ValueError(f"expected {point.n} factors, got {len(factors)}")
    return MatTuple(
        point.n, point.q,
        tuple(m.scale(z) for m, z in zip(point.matrices, factors)),
        point.ring,
    )


def commutation_system(point: MatTuple) -> ExactMatrix:
    """
    Linear system f_{alpha+1} X_alpha - X_alpha f_alpha = 0 in the n q^2
    unknowns (f_alpha)[a][b], indexed alpha*q^2 + a*q + b
    """
    n, q = point.n, point.q
    rows = []
    for a in range(n):
        x = point.matrices[a]
        target = (a + 1) % n
        for i in range(q):
            for j in range(q):
                coefficients: Dict[int, Fraction] = {}
                for c in range(q):
                    if x[c, j]:
                        key = target * q * q + i * q + c
                        coefficients[key] = coefficients.get(key, 0) + x[c, j]
                    if x[i, c]:
                        key = a * q * q + c * q + j
                        coefficients[key] = coefficients.get(key, 0) - x[i, c]
                rows.append(coefficients)
    return matrix_from_rows(rows, n * q * q)


def orbit_dimension(point: MatTuple, guard: Optional[int] = None) -> int:
    """
    Dimension of the base-change orbit of a rational point

    dim GL(U_1) x ... x GL(U_n) minus the dimension of the stabilizer algebra,
    i.e. n q^2 minus the nullity of the commutation system.

    Raises:
        GuardExceeded: If n q^2 is beyond the orbit guard
    """
    guard = get_config().ORBIT_GUARD if guard is None else guard
    unknowns = point.n * point.q * point.q
    check_guard("commutation system unknowns n*q^2", unknowns, guard)
    return unknowns - nullity(commutation_system(point))
