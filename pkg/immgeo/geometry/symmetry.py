"""
Symmetries of IMM

The continuous part acts through tuples (g_1, ..., g_n) of invertible
matrices, X_alpha -> g_{alpha+1} X_alpha g_alpha^{-1}; the discrete part is
generated by the rotation rho and the transpose-reversal tau. The module
also verifies Lie-algebra annihilation, computes invariant dimensions of
multidegree components and the stabilizer of the marked Dynkin diagrams.
"""
from abc import ABC, abstractmethod
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product as cartesian
from math import comb, factorial, prod
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from immgeo.algebra.linalg import exact_rank, inverse, matrix_from_rows
from immgeo.algebra.matrix import ExactMatrix
from immgeo.algebra.rings import RATIONALS
from immgeo.config.settings import get_config
from immgeo.geometry.imm_poly import MatTuple, evaluate, gradient
from immgeo.utils.errors import InputError, NonUnitError, check_guard
from immgeo.utils.logger import Logger
from immgeo.utils.sampling import make_rng, random_rational_grid
from immgeo.utils.validators import validate_multidegree, validate_positive_integer


# ---------- GROUP ELEMENTS ----------
class GroupElement(ABC):
    """A linear transformation of V* = Mat_q^n"""

    @abstractmethod
    def apply(self, point: MatTuple) -> MatTuple:
        """Image of a point"""

    def describe(self) -> str:
        return type(self).__name__


class PhiTuple(GroupElement):
    """(g_1, ..., g_n) acting by X_alpha -> g_{alpha+1} X_alpha g_alpha^{-1}"""

    def __init__(self, matrices: Sequence[ExactMatrix]):
        self.matrices = tuple(matrices)
        try:
            self.inverses = tuple(inverse(g) for g in self.matrices)
        except NonUnitError as exc:
            raise InputError("PhiTuple entries must be invertible") from exc

    @property
    def n(self) -> int:
        return len(self.matrices)

    def apply(self, point: MatTuple) -> MatTuple:
        if point.n != self.n:
            raise ValueError(f"PhiTuple of length {self.n} applied to a point with n={point.n}")
        n = self.n
        images = tuple(
            self.matrices[(a + 1) % n] @ point.matrices[a] @ self.inverses[a] for a in range(n)
        )
        return MatTuple(point.n, point.q, images, point.ring)

    def describe(self) -> str:
        return f"PhiTuple(n={self.n})"


class CyclicShift(GroupElement):
    """rho^k: (X_1, ..., X_n) -> (X_{1+k}, ..., X_{n+k})"""

    def __init__(self, k: int = 1):
        self.k = k

    def apply(self, point: MatTuple) -> MatTuple:
        n = point.n
        images = tuple(point.matrices[(a + self.k) % n] for a in range(n))
        return MatTuple(n, point.q, images, point.ring)

    def describe(self) -> str:
        return f"CyclicShift({self.k})"


class TransposeReversal(GroupElement):
    """tau: (X_1, ..., X_n) -> (X_n^T, ..., X_1^T)"""

    def apply(self, point: MatTuple) -> MatTuple:
        n = point.n
        images = tuple(point.matrices[n - 1 - a].transpose() for a in range(n))
        return MatTuple(n, point.q, images, point.ring)


class Composite(GroupElement):
    """Product of elements, applied left to right"""

    def __init__(self, elements: Sequence[GroupElement]):
        self.elements = tuple(elements)

    def apply(self, point: MatTuple) -> MatTuple:
        for element in self.elements:
            point = element.apply(point)
        return point

    def describe(self) -> str:
        return " then ".join(e.describe() for e in self.elements) or "identity"


class SlotTranspose(GroupElement):
    """X_alpha -> X_alpha^T in one slot only; not a symmetry for q >= 2, n >= 2"""

    def __init__(self, alpha: int):
        self.alpha = alpha

    def apply(self, point: MatTuple) -> MatTuple:
        return point.replace(self.alpha, point.block(self.alpha).transpose())

    def describe(self) -> str:
        return f"SlotTranspose({self.alpha})"


def apply(g: GroupElement, point: MatTuple) -> MatTuple:
    return g.apply(point)


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    """g o h: h acts first"""
    return Composite((h, g))


def scalar_phi(n: int, q: int, z) -> PhiTuple:
    """(z I, ..., z I); lies in the kernel of the action"""
    return PhiTuple([ExactMatrix.identity(q).scale(z) for _ in range(n)])


def random_invertible(q: int, rng) -> ExactMatrix:
    """Random rational matrix of full rank"""
    retries = get_config().SAMPLE_RETRIES
    for _ in range(retries):
        candidate = ExactMatrix.from_rows(random_rational_grid(rng, q, q), RATIONALS)
        if exact_rank(candidate) == q:
            return candidate
        Logger.debug("resampling singular matrix for PhiTuple")
    raise NonUnitError(f"no invertible {q}x{q} sample after {retries} draws")


def random_phi_tuple(n: int, q: int, rng) -> PhiTuple:
    return PhiTuple([random_invertible(q, rng) for _ in range(n)])


def random_word(generators: Sequence[GroupElement], length: int, rng) -> Composite:
    """Composite of ``length`` generators drawn uniformly"""
    picks = rng.integers(0, len(generators), size=length)
    return Composite([generators[int(i)] for i in picks])


def standard_generators(n: int, q: int, rng, continuous: int = 2) -> List[GroupElement]:
    """Random PhiTuples together with rho and tau"""
    generators: List[GroupElement] = [random_phi_tuple(n, q, rng) for _ in range(continuous)]
    generators.extend([CyclicShift(1), TransposeReversal()])
    return generators


def check_invariance(g: GroupElement, n: int, q: int, trials: int = None, seed: int = None) -> bool:
    """
    Exact invariance test at random rational points

    Args:
        g: Transformation to test
        n, q: Shape of the points
        trials: Number of random points
        seed: Seed of the point sampler

    Returns:
        True iff evaluate(g(x)) == evaluate(x) at every sampled point
    """
    trials = get_config().DEFAULT_TRIALS if trials is None else trials
    validate_positive_integer(trials, "trials")
    rng = make_rng(seed)
    for trial in range(trials):
        point = MatTuple.random(n, q, rng)
        before = evaluate(point)
        after = evaluate(g.apply(point))
        if before != after:
            Logger.debug(
                f"{g.describe()} changes IMM at trial {trial}: {before} -> {after}"
            )
            return False
    return True


# ---------- LIE ALGEBRA ----------
@dataclass(frozen=True)
class LieElement:
    """L in gl(U_alpha)"""

    alpha: int
    L: ExactMatrix


def _pairing(a: ExactMatrix, b: ExactMatrix):
    total = Fraction(0)
    for row_a, row_b in zip(a.entries, b.entries):
        for x, y in zip(row_a, row_b):
            if x and y:
                total += x * y
    return total


def lie_directional_derivative(element: LieElement, point: MatTuple, compensate: bool = True):
    """
    Derivative of IMM along the vector field of L at vertex alpha

    The curve g = I + eps L moves X_{alpha-1} by L X_{alpha-1} and X_alpha by
    -X_alpha L. Without compensation only the X_alpha term is kept.
    """
    grads = gradient(point)
    target = (element.alpha - 1) % point.n
    source = (element.alpha - 2) % point.n
    value = -_pairing(grads[target], point.matrices[target] @ element.L)
    if compensate:
        value += _pairing(grads[source], element.L @ point.matrices[source])
    return value


def lie_annihilates(element: LieElement, n: int, q: int, trials: int = None, seed: int = None,
                    compensate: bool = True) -> bool:
    """True iff the directional derivative vanishes exactly at random points"""
    trials = get_config().DEFAULT_TRIALS if trials is None else trials
    validate_positive_integer(trials, "trials")
    rng = make_rng(seed)
    for _ in range(trials):
        point = MatTuple.random(n, q, rng)
        if lie_directional_derivative(element, point, compensate):
            return False
    return True


# ---------- INVARIANTS OF MULTIDEGREE COMPONENTS ----------
def multidegrees(n: int) -> List[Tuple[int, ...]]:
    """All n-tuples of naturals summing to n, lexicographically descending"""
    result = []

    def extend(prefix, remaining, slots):
        if slots == 1:
            result.append(tuple(prefix + [remaining]))
            return
        for part in range(remaining, -1, -1):
            extend(prefix + [part], remaining - part, slots - 1)

    extend([], n, n)
    return result


def multidegree_dimension(q: int, multidegree: Sequence[int]) -> int:
    """Dimension of S^{a_1} A_1* x ... x S^{a_n} A_n*"""
    return prod(comb(q * q + a - 1, a) for a in multidegree)


Monomial = Tuple[Tuple[int, ...], ...]


def _is_weight_zero(monomial: Monomial, n: int, q: int) -> bool:
    # vertex v sees the row indices of X_{v-1} and the column indices of X_v
    for v in range(n):
        balance = [0] * q
        for var in monomial[(v - 1) % n]:
            balance[var // q] += 1
        for var in monomial[v]:
            balance[var % q] -= 1
        if any(balance):
            return False
    return True


def _replace(monomial: Monomial, block: int, old: int, new: int) -> Monomial:
    variables = list(monomial[block])
    variables.remove(old)
    variables.append(new)
    blocks = list(monomial)
    blocks[block] = tuple(sorted(variables))
    return tuple(blocks)


def _root_operator(monomial: Monomial, v: int, i: int, j: int, n: int, q: int) -> Dict[Monomial, int]:
    """
    E_ij at vertex v acting by derivation:
    sum_b X_{v-1}[j][b] d/dX_{v-1}[i][b]  -  sum_a X_v[a][i] d/dX_v[a][j]
    """
    image: Dict[Monomial, int] = defaultdict(int)
    source = (v - 1) % n
    for var, exponent in Counter(monomial[source]).items():
        row, col = divmod(var, q)
        if row == i:
            image[_replace(monomial, source, var, j * q + col)] += exponent
    for var, exponent in Counter(monomial[v]).items():
        row, col = divmod(var, q)
        if col == j:
            image[_replace(monomial, v, var, row * q + i)] -= exponent
    return image


def invariant_space_dim(n: int, q: int, multidegree: Sequence[int], guard: Optional[int] = None) -> int:
    """
    Dimension of the invariants of gl(U_1) x ... x gl(U_n) in one
    multidegree component of S^n V

    The Cartan operators E_ii act diagonally on monomials, so their joint
    kernel is spanned by the weight-zero monomials; the root operators E_ij
    (i != j) are then materialized as one stacked matrix on that span.

    Raises:
        InputError: If the multidegree is malformed
        GuardExceeded: If the component dimension is beyond the guard
    """
    multidegree = tuple(multidegree)
    validate_multidegree(multidegree, n)
    guard = get_config().MULTIDEGREE_GUARD if guard is None else guard
    check_guard("multidegree component dimension", multidegree_dimension(q, multidegree), guard)

    per_block = [list(combinations_with_replacement(range(q * q), a)) for a in multidegree]
    weight_zero = [m for m in cartesian(*per_block) if _is_weight_zero(m, n, q)]
    if not weight_zero:
        return 0
    columns = {m: index for index, m in enumerate(weight_zero)}

    rows = []
    for v in range(n):
        for i in range(q):
            for j in range(q):
                if i == j:
                    continue
                equations: Dict[Monomial, Dict[int, Fraction]] = defaultdict(dict)
                for monomial, col in columns.items():
                    for target, coefficient in _root_operator(monomial, v, i, j, n, q).items():
                        if coefficient:
                            line = equations[target]
                            line[col] = line.get(col, Fraction(0)) + coefficient
                rows.extend(line for line in equations.values() if any(line.values()))
    if not rows:
        return len(weight_zero)
    return len(weight_zero) - exact_rank(matrix_from_rows(rows, len(weight_zero)))


def characterization_sweep(n: int, q: int, guard: Optional[int] = None) -> Dict[Tuple[int, ...], int]:
    """invariant_space_dim over every multidegree whose component fits the guard"""
    guard = get_config().MULTIDEGREE_GUARD if guard is None else guard
    sweep = {}
    for multidegree in multidegrees(n):
        if multidegree_dimension(q, multidegree) <= guard:
            sweep[multidegree] = invariant_space_dim(n, q, multidegree, guard)
    return sweep


# ---------- MARKED DYNKIN DIAGRAMS ----------
Mark = Tuple[int, int]
WreathElement = Tuple[Tuple[int, ...], Tuple[int, ...]]   # (flips, permutation), 0-based rows


@dataclass(frozen=True)
class MarkedDiagramSet:
    """The diagrams {(alpha, 1), (alpha+1, q-1)} of A_alpha = U_alpha* x U_{alpha+1}"""

    n: int
    q: int
    diagrams: Tuple[FrozenSet[Mark], ...]

    @classmethod
    def build(cls, n: int, q: int) -> "MarkedDiagramSet":
        if q < 2:
            raise InputError("marked diagrams need q >= 2")
        diagrams = tuple(
            frozenset({(alpha, 1), (alpha % n + 1, q - 1)}) for alpha in range(1, n + 1)
        )
        return cls(n, q, diagrams)

    def as_set(self) -> FrozenSet[FrozenSet[Mark]]:
        return frozenset(self.diagrams)


def act_on_mark(element: WreathElement, mark: Mark, q: int) -> Mark:
    flips, permutation = element
    row, position = mark
    if flips[row - 1]:
        position = q - position
    return permutation[row - 1] + 1, position


def wreath_compose(g: WreathElement, h: WreathElement) -> WreathElement:
    """g o h"""
    flips_g, perm_g = g
    flips_h, perm_h = h
    permutation = tuple(perm_g[perm_h[r]] for r in range(len(perm_h)))
    flips = tuple(flips_h[r] ^ flips_g[perm_h[r]] for r in range(len(perm_h)))
    return flips, permutation


def wreath_identity(n: int) -> WreathElement:
    return (0,) * n, tuple(range(n))


def wreath_order(element: WreathElement) -> int:
    identity = wreath_identity(len(element[1]))
    power, order = element, 1
    while power != identity:
        power = wreath_compose(element, power)
        order += 1
    return order


def _is_full_cycle(permutation: Tuple[int, ...]) -> bool:
    seen, current = set(), 0
    while current not in seen:
        seen.add(current)
        current = permutation[current]
    return len(seen) == len(permutation)


def dihedral_generators(group: Sequence[WreathElement], n: int) -> Optional[Tuple[WreathElement, WreathElement]]:
    """
    (r, s) with r of order n acting by an n-cycle, s an involution outside
    <r> and s r s = r^-1, provided |group| = 2n; None otherwise
    """
    if len(group) != 2 * n:
        return None
    identity = wreath_identity(n)
    elements = set(group)
    for r in group:
        if wreath_order(r) != n or not _is_full_cycle(r[1]):
            continue
        powers, power = {identity}, r
        while power != identity:
            powers.add(power)
            power = wreath_compose(r, power)
        r_inverse = next(p for p in powers if wreath_compose(r, p) == identity)
        for s in group:
            if s in powers or wreath_compose(s, s) != identity:
                continue
            if wreath_compose(s, wreath_compose(r, s)) == r_inverse:
                generated = powers | {wreath_compose(s, p) for p in powers}
                if generated == elements:
                    return r, s
    return None


@dataclass(frozen=True)
class DynkinStabilizer:
    n: int
    q: int
    order: int
    is_dihedral: bool
    generators: Tuple[WreathElement, ...]
    flips_trivial: bool
    image_order: int
    image_is_dihedral: bool
    elements: Tuple[WreathElement, ...] = field(repr=False, default=())


def dynkin_stabilizer(n: int, q: int, guard: Optional[int] = None) -> DynkinStabilizer:
    """
    Set-stabilizer of {Delta(A_1), ..., Delta(A_n)} in Z_2 wr S_n

    A permutation can only qualify if it maps the row supports of the
    diagrams onto themselves, so flips are enumerated for those alone.
    For q = 2 the flips fix every mark; the image in S_n is reported too.

    Raises:
        GuardExceeded: If 2^n n! is beyond the guard
    """
    guard = get_config().WREATH_GUARD if guard is None else guard
    check_guard("wreath product order 2^n n!", 2 ** n * factorial(n), guard)
    diagram_set = MarkedDiagramSet.build(n, q)
    target = diagram_set.as_set()
    supports = frozenset(frozenset(row for row, _ in d) for d in diagram_set.diagrams)

    stabilizer: List[WreathElement] = []
    for permutation in permutations(range(n)):
        moved = frozenset(frozenset(permutation[row - 1] + 1 for row in s) for s in supports)
        if moved != supports:
            continue
        for flips in cartesian((0, 1), repeat=n):
            element = (flips, permutation)
            image = frozenset(
                frozenset(act_on_mark(element, mark, q) for mark in d) for d in diagram_set.diagrams
            )
            if image == target:
                stabilizer.append(element)

    generators = dihedral_generators(stabilizer, n)
    image = sorted({((0,) * n, element[1]) for element in stabilizer})
    image_generators = dihedral_generators(image, n)
    Logger.info(
        f"dynkin stabilizer n={n} q={q}: order {len(stabilizer)}, "
        f"dihedral {generators is not None}, S_n image order {len(image)}"
    )
    return DynkinStabilizer(
        n=n,
        q=q,
        order=len(stabilizer),
        is_dihedral=generators is not None,
        generators=tuple(generators or ()),
        flips_trivial=(q == 2),
        image_order=len(image),
        image_is_dihedral=image_generators is not None,
        elements=tuple(stabilizer),
    )
