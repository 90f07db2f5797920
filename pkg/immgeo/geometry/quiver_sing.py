"""
Irreducible components of the singular locus of the IMM hypersurface

Components correspond to the rank-maximal (n-1)-nilpotent representations
of the cyclic quiver with dimension vector (q, ..., q). A representation is
a multiset of interval modules E(s, e): one-dimensional spaces along the
cyclic walk s, s+1, ..., e with identity maps in between. The walk has
((e - s) mod n) + 1 vertices and at most n - 1 of them.
"""
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product as cartesian
from math import comb
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from immgeo.algebra.linalg import exact_rank
from immgeo.algebra.matrix import ExactMatrix
from immgeo.config.settings import get_config
from immgeo.geometry.imm_poly import MatTuple, orbit_dimension
from immgeo.models import MoveKind
from immgeo.utils.errors import GuardExceeded, VerificationFailure
from immgeo.utils.logger import Logger
from immgeo.utils.validators import validate_dimensions


# ---------- INTERVALS ----------
@dataclass(frozen=True, order=True)
class Interval:
    """E(start, end), both 1-based vertices"""

    start: int
    end: int

    def __str__(self):
        return f"E{self.start}{self.end}" if max(self.start, self.end) < 10 else f"E({self.start},{self.end})"


def interval_length(interval: Interval, n: int) -> int:
    """Number of vertices on the support"""
    return (interval.end - interval.start) % n + 1


def interval_vertices(interval: Interval, n: int) -> List[int]:
    return [(interval.start - 1 + k) % n + 1 for k in range(interval_length(interval, n))]


def contains_walk(interval: Interval, alpha: int, arrows: int, n: int) -> bool:
    """True iff the walk from alpha along ``arrows`` arrows stays inside the support"""
    offset = (alpha - interval.start) % n
    return offset + arrows <= interval_length(interval, n) - 1


def make_interval(start: int, end: int, n: int) -> Interval:
    return Interval((start - 1) % n + 1, (end - 1) % n + 1)


def is_valid_interval(interval: Interval, n: int) -> bool:
    """start != end + 1, i.e. the support is not the whole cycle"""
    return (interval.start - interval.end) % n != 1 and n >= 2


def enumerate_intervals(n: int) -> List[Interval]:
    """All n^2 - n intervals of (n-1)-nilpotent modules; empty for n = 1"""
    validate_dimensions(n, 1)
    return [
        Interval(s, e)
        for s in range(1, n + 1) for e in range(1, n + 1)
        if is_valid_interval(Interval(s, e), n)
    ]


# ---------- REPRESENTATIONS ----------
@dataclass(frozen=True)
class QuiverRep:
    """Direct sum of interval modules, stored as sorted (interval, multiplicity) pairs"""

    n: int
    q: int
    summands: Tuple[Tuple[Interval, int], ...]

    @classmethod
    def from_counts(cls, n: int, q: int, counts: Dict[Interval, int]) -> "QuiverRep":
        summands = tuple(sorted((i, m) for i, m in counts.items() if m > 0))
        return cls(n, q, summands)

    @property
    def multiplicity(self) -> Dict[Interval, int]:
        return dict(self.summands)

    def dimension_vector(self) -> Tuple[int, ...]:
        dims = [0] * self.n
        for interval, m in self.summands:
            for vertex in interval_vertices(interval, self.n):
                dims[vertex - 1] += m
        return tuple(dims)

    def is_valid(self) -> bool:
        return all(is_valid_interval(i, self.n) for i, _ in self.summands) and \
            self.dimension_vector() == (self.q,) * self.n

    @property
    def label(self) -> str:
        parts = [str(i) if m == 1 else f"{i}^{m}" for i, m in self.summands]
        return "+".join(parts) if parts else "0"

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class RankMatrix:
    """r[alpha][beta] = rank of the path from alpha to beta; 1-based, read modulo n"""

    n: int
    entries: Tuple[Tuple[int, ...], ...]

    def __getitem__(self, index: Tuple[int, int]) -> int:
        a, b = index
        return self.entries[(a - 1) % self.n][(b - 1) % self.n]

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def dominates(self, other: "RankMatrix") -> bool:
        """Entrywise >= and not equal"""
        mine, theirs = self.as_array(), other.as_array()
        return bool(np.all(mine >= theirs) and np.any(mine > theirs))

    @classmethod
    def from_array(cls, array: np.ndarray) -> "RankMatrix":
        return cls(array.shape[0], tuple(tuple(int(v) for v in row) for row in array))


def combinatorial_rank_matrix(rep: QuiverRep) -> RankMatrix:
    """Count of summands whose support contains the walk alpha -> beta"""
    n = rep.n
    ranks = np.zeros((n, n), dtype=np.int64)
    for interval, m in rep.summands:
        length = interval_length(interval, n)
        for offset in range(length):
            alpha = (interval.start - 1 + offset) % n
            for arrows in range(length - offset):
                ranks[alpha, (alpha + arrows) % n] += m
    return RankMatrix.from_array(ranks)


def point_rank_matrix(point: MatTuple) -> RankMatrix:
    """Exact ranks of the chain products X_{beta-1} ... X_alpha"""
    n = point.n
    ranks = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            arrows = (b - a) % n
            if arrows == n - 1:
                continue
            ranks[a, b] = exact_rank(point.chains.segment(a + arrows - 1, arrows))
    return RankMatrix.from_array(ranks)


def realize(rep: QuiverRep) -> MatTuple:
    """
    0/1 matrices of the direct sum

    Interval copies are ordered by (start, end, copy); each copy takes the
    next free slot at every vertex of its support, and X_gamma sends the
    copy's slot at gamma to its slot at gamma + 1 unless gamma is its end.
    """
    n, q = rep.n, rep.q
    next_slot = [0] * n
    arrows: List[Dict[Tuple[int, int], int]] = [dict() for _ in range(n)]
    for interval, m in rep.summands:
        vertices = [v - 1 for v in interval_vertices(interval, n)]
        for _ in range(m):
            slots = []
            for v in vertices:
                slots.append(next_slot[v])
                next_slot[v] += 1
            for k in range(len(vertices) - 1):
                arrows[vertices[k]][(slots[k + 1], slots[k])] = 1
    if any(filled != q for filled in next_slot):
        raise ValueError(f"{rep} does not have dimension vector ({q}, ..., {q})")
    matrices = tuple(ExactMatrix.from_sparse(q, q, items) for items in arrows)
    return MatTuple(n, q, matrices)


def rank_matrix(rep: QuiverRep) -> RankMatrix:
    """
    Rank matrix computed from the realized matrices and from the interval
    supports; the two must agree

    Raises:
        VerificationFailure: If the two computations differ
    """
    exact = point_rank_matrix(realize(rep))
    counted = combinatorial_rank_matrix(rep)
    if exact != counted:
        raise VerificationFailure(f"rank matrix mismatch for {rep}: {exact.entries} vs {counted.entries}")
    return counted


def is_singular_point(point: MatTuple) -> bool:
    """Every product of n - 1 consecutive blocks vanishes"""
    return all(point.chains.omitting(a).is_zero() for a in range(point.n))


# ---------- ENUMERATION ----------
def _wrapped_patterns(n: int, q: int) -> Iterator[Dict[int, int]]:
    """Multisets of starts 3..n of strands passing from vertex n to vertex 1"""
    starts = range(3, n + 1)
    for size in range(q + 1):
        for chosen in combinations_with_replacement(starts, size):
            yield dict(Counter(chosen))


def enumerate_decompositions(n: int, q: int, guard: Optional[int] = None) -> List[QuiverRep]:
    """
    Every multiset of intervals covering each vertex exactly q times

    Strands are followed vertex by vertex: after guessing the strands that
    wrap from n to 1, new strands are opened at each vertex until q are
    open, and for every start class a number of strands is closed there. A
    strand covering n - 1 vertices must close. The open strands after
    vertex n must be the guessed ones.

    Raises:
        GuardExceeded: If more than ``guard`` representations exist
    """
    validate_dimensions(n, q)
    guard = get_config().DECOMPOSITION_GUARD if guard is None else guard
    if n == 1:
        return []
    results: List[QuiverRep] = []

    def visit(vertex: int, carried: Dict[int, int], found: Counter, wrapped: Dict[int, int]):
        if vertex > n:
            if carried == wrapped:
                results.append(QuiverRep.from_counts(n, q, found))
                if len(results) > guard:
                    raise GuardExceeded("decomposition count", len(results), guard)
            return
        open_strands = dict(carried)
        fresh = q - sum(open_strands.values())
        if fresh < 0:
            return
        if fresh:
            open_strands[vertex] = open_strands.get(vertex, 0) + fresh
        starts = sorted(open_strands)
        options = []
        for start in starts:
            count = open_strands[start]
            length = (vertex - start) % n + 1
            options.append([count] if length >= n - 1 else list(range(count + 1)))
        for closing in cartesian(*options):
            following = {}
            added = Counter()
            for start, closed in zip(starts, closing):
                if closed:
                    added[Interval(start, vertex)] += closed
                remaining = open_strands[start] - closed
                if remaining:
                    following[start] = remaining
            visit(vertex + 1, following, found + added, wrapped)

    for wrapped in _wrapped_patterns(n, q):
        visit(1, dict(wrapped), Counter(), wrapped)
    Logger.debug(f"enumerated {len(results)} representations for n={n}, q={q}")
    return results


# ---------- ELEMENTARY MOVES ----------
class Move(NamedTuple):
    kind: MoveKind
    consumed: Tuple[Interval, Interval]
    produced: Tuple[Interval, ...]

    def __str__(self):
        return f"{self.kind.value}: {self.consumed[0]}+{self.consumed[1]} -> " + \
            "+".join(str(i) for i in self.produced)


def _glue(first: Interval, second: Interval, n: int) -> Tuple[Optional[Tuple[Interval, ...]], Optional[str]]:
    """E(a, b) + E(b+1, d) -> E(a, d)"""
    if second.start != first.end % n + 1:
        return None, None
    if interval_length(first, n) + interval_length(second, n) > n - 1:
        return None, "glued support would exceed n - 1 vertices"
    return (make_interval(first.start, second.end, n),), None


def _shift(first: Interval, second: Interval, n: int) -> Tuple[Optional[Tuple[Interval, ...]], Optional[str]]:
    """
    E(a, b) + E(c, d) -> E(a, d) + E(c, b) for a, c, b, d in cyclic order,
    c strictly after a, d strictly after b; c = b is allowed
    """
    first_length = interval_length(first, n)
    offset = (second.start - first.start) % n
    if not 1 <= offset <= first_length - 1:
        return None, None
    union = offset + interval_length(second, n)
    if union <= first_length:
        return None, None
    if union > n - 1:
        return None, "shifted support would exceed n - 1 vertices"
    return (make_interval(first.start, second.end, n), make_interval(second.start, first.end, n)), None


def _candidate_moves(rep: QuiverRep) -> Iterator[Tuple[Move, Optional[str]]]:
    types = [interval for interval, _ in rep.summands]
    for first in types:
        for second in types:
            if first == second:
                continue
            for kind, rule in ((MoveKind.GLUE, _glue), (MoveKind.SHIFT, _shift)):
                produced, rejection = rule(first, second, rep.n)
                if produced is not None:
                    yield Move(kind, (first, second), produced), None
                elif rejection is not None:
                    yield Move(kind, (first, second), ()), rejection


def _apply_move(rep: QuiverRep, move: Move) -> QuiverRep:
    counts = Counter(rep.multiplicity)
    for interval in move.consumed:
        counts[interval] -= 1
    for interval in move.produced:
        counts[interval] += 1
    return QuiverRep.from_counts(rep.n, rep.q, counts)


def applicable_moves(rep: QuiverRep) -> List[Tuple[Move, QuiverRep]]:
    """Every gluing and shift applicable to the summands, with its result"""
    moves = []
    for move, rejection in _candidate_moves(rep):
        if rejection is not None:
            Logger.debug(f"{move.kind.value} of {move.consumed[0]} and {move.consumed[1]} rejected: {rejection}")
            continue
        moves.append((move, _apply_move(rep, move)))
    return moves


def has_applicable_move(rep: QuiverRep) -> bool:
    return any(rejection is None for _, rejection in _candidate_moves(rep))


# ---------- DIMENSIONS ----------
def _steps(r: RankMatrix) -> Iterator[Tuple[int, int, int]]:
    """(alpha, beta, r[alpha+beta, alpha] - r[alpha+beta-1, alpha]) over alpha, beta = 2..n"""
    n = r.n
    for alpha in range(1, n + 1):
        for beta in range(2, n + 1):
            yield alpha, beta, r[alpha + beta, alpha] - r[alpha + beta - 1, alpha]


def flag_dimension(r: RankMatrix) -> int:
    """
    Sum over vertices of the dimension of the flag of images into U_alpha

    The distinct ranks of the paths ending at alpha cut q into jumps
    m_1, ..., m_k; the partial flag variety of that type has dimension
    (q^2 - sum m_i^2) / 2.
    """
    total = 0
    for alpha in range(1, r.n + 1):
        q = r[alpha, alpha]
        levels = sorted({0, q} | {r[alpha + beta, alpha] for beta in range(1, r.n)})
        jumps = np.diff(np.array(levels, dtype=np.int64))
        total += (q * q - int(np.sum(jumps * jumps))) // 2
    return total


def fiber_dimension(r: RankMatrix) -> int:
    """Rank of the vector bundle over the product of flag varieties"""
    return sum(step * r[a + b, a + 1] for a, b, step in _steps(r))


def component_dimension(r: RankMatrix) -> int:
    """
    sum over alpha and beta = 2..n of
    (r[alpha+beta, alpha] - r[alpha+beta-1, alpha]) * (r[alpha+beta-1, alpha] + r[alpha+beta, alpha+1])
    """
    return sum(
        step * (r[a + b - 1, a] + r[a + b, a + 1]) for a, b, step in _steps(r)
    )


def orbit_dimension_oracle(rep: QuiverRep, guard: Optional[int] = None) -> int:
    """n q^2 minus the dimension of End(rep)"""
    return orbit_dimension(realize(rep), guard)


# ---------- MAXIMAL COMPONENTS ----------
@dataclass(frozen=True)
class SingComponent:
    rep: QuiverRep
    rank_matrix: RankMatrix
    dim_formula: int
    dim_oracle: Optional[int]
    representative: MatTuple

    @property
    def label(self) -> str:
        return self.rep.label


def rank_maximal_reps(reps: Sequence[QuiverRep]) -> List[QuiverRep]:
    """
    Reps whose rank matrix no other rep dominates entrywise

    Candidates are visited by decreasing rank sum, so a dominating matrix
    is always visited first; domination is transitive, so testing against
    the maxima found so far suffices.
    """
    if not reps:
        return []
    table = np.stack([combinatorial_rank_matrix(r).as_array().ravel() for r in reps])
    order = np.argsort(-table.sum(axis=1), kind="stable")
    maxima: List[int] = []
    for index in order:
        row = table[index]
        if maxima and np.any(np.all(table[maxima] >= row, axis=1)):
            continue
        maxima.append(int(index))
    return [reps[i] for i in maxima]


def package_component(rep: QuiverRep, guard: Optional[int] = None) -> SingComponent:
    """
    Rank matrix, both dimensions and the representative of one maximal rep

    Raises:
        VerificationFailure: If the two rank computations or the two
            dimensions disagree, or the representative is not singular
    """
    guard = get_config().ORBIT_GUARD if guard is None else guard
    ranks = rank_matrix(rep)
    representative = realize(rep)
    if not is_singular_point(representative):
        raise VerificationFailure(f"representative of {rep} is not a singular point")
    dim_formula = component_dimension(ranks)
    dim_oracle = None
    if rep.n * rep.q * rep.q <= guard:
        dim_oracle = orbit_dimension(representative, guard)
        if dim_oracle != dim_formula:
            raise VerificationFailure(
                f"dimension mismatch for {rep}: formula {dim_formula}, orbit {dim_oracle}"
            )
    else:
        Logger.info(f"orbit oracle skipped for {rep}: n*q^2 beyond guard {guard}")
    return SingComponent(rep, ranks, dim_formula, dim_oracle, representative)


def maximal_components(n: int, q: int, guard: Optional[int] = None) -> List[SingComponent]:
    """
    Irreducible components of Sing, one per rank-maximal representation

    Maximality is decided by the absence of elementary moves and certified
    against the brute-force rank order over the full enumeration.

    Raises:
        GuardExceeded: If the enumeration exceeds the guard
        VerificationFailure: If the two maximality criteria disagree
    """
    reps = enumerate_decompositions(n, q, guard)
    move_maximal = [rep for rep in reps if not has_applicable_move(rep)]
    brute_force = rank_maximal_reps(reps)
    if set(move_maximal) != set(brute_force):
        extra = sorted(str(r) for r in set(move_maximal) ^ set(brute_force))
        raise VerificationFailure(f"move-maximal and rank-maximal reps differ for n={n}, q={q}: {extra}")
    components = [package_component(rep) for rep in sorted(move_maximal, key=lambda r: r.summands)]
    Logger.info(f"singular locus n={n}, q={q}: {len(components)} components out of {len(reps)} reps")
    return components


def sing_locus_dimension(n: int, q: int, guard: Optional[int] = None) -> Optional[int]:
    """Largest component dimension; None when the locus is empty (n = 1)"""
    components = maximal_components(n, q, guard)
    if not components:
        return None
    return max(c.dim_formula for c in components)


# ---------- CLOSED FAMILIES ----------
class FamilyMember(NamedTuple):
    label: str
    rep: QuiverRep
    dim: int
    point: Optional[MatTuple] = None


def n3_maximal_family(q: int) -> List[FamilyMember]:
    """
    (E_aa + E_{a+1,a-1})^k + (E12 + E23 + E31)^l for k + 2l = q,
    of dimension q^2 + 2l(q - l); the choice of a matters only when k > 0
    """
    validate_dimensions(3, q)
    members = []
    for ell in range(q // 2, -1, -1):
        k = q - 2 * ell
        cycle = Counter({Interval(1, 2): ell, Interval(2, 3): ell, Interval(3, 1): ell})
        dim = q * q + 2 * ell * (q - ell)
        if k == 0:
            members.append(FamilyMember(f"l={ell}", QuiverRep.from_counts(3, q, cycle), dim))
            continue
        for alpha in range(1, 4):
            counts = cycle + Counter({Interval(alpha, alpha): k, make_interval(alpha + 1, alpha + 2, 3): k})
            members.append(FamilyMember(f"l={ell},k={k},a={alpha}", QuiverRep.from_counts(3, q, counts), dim))
    return members


def _two_by_two(entries) -> ExactMatrix:
    return ExactMatrix.from_rows(entries)


def q2_maximal_families(n: int) -> List[FamilyMember]:
    """
    The maximal reps for q = 2, n >= 4, each with a point whose orbit is dense
    in the component:

    * X_a = X_b = 0, identities elsewhere (codimension 8);
    * the nilpotent Jordan block at three vertices (codimension 6);
    * E11 at two vertices and E22 at two others, the pairs not interleaved
      (codimension 6).
    """
    validate_dimensions(n, 2, min_n=4)
    identity = ExactMatrix.identity(2)
    zero = ExactMatrix.zeros(2, 2)
    nilpotent = _two_by_two([[0, 1], [0, 0]])
    e11 = _two_by_two([[1, 0], [0, 0]])
    e22 = _two_by_two([[0, 0], [0, 1]])

    def point_with(assignments: Dict[int, ExactMatrix]) -> MatTuple:
        return MatTuple(n, 2, tuple(assignments.get(v, identity) for v in range(1, n + 1)))

    def member(label: str, counts: Counter, point: MatTuple) -> FamilyMember:
        rep = QuiverRep.from_counts(n, 2, counts)
        return FamilyMember(label, rep, component_dimension(combinatorial_rank_matrix(rep)), point)

    members = []
    for a, b in combinations(range(1, n + 1), 2):
        counts = Counter({make_interval(a + 1, b, n): 2, make_interval(b + 1, a, n): 2})
        members.append(member(f"zero({a},{b})", counts, point_with({a: zero, b: zero})))
    for a, b, c in combinations(range(1, n + 1), 3):
        counts = Counter({
            make_interval(a + 1, c, n): 1, make_interval(b + 1, a, n): 1, make_interval(c + 1, b, n): 1,
        })
        members.append(member(f"nilpotent({a},{b},{c})", counts, point_with({a: nilpotent, b: nilpotent, c: nilpotent})))
    for a, b, c, d in combinations(range(1, n + 1), 4):
        for (p1, p2), (s1, s2) in (((a, b), (c, d)), ((a, d), (b, c))):
            counts = Counter({
                make_interval(p1 + 1, p2, n): 1, make_interval(p2 + 1, p1, n): 1,
                make_interval(s1 + 1, s2, n): 1, make_interval(s2 + 1, s1, n): 1,
            })
            point = point_with({p1: e11, p2: e11, s1: e22, s2: e22})
            members.append(member(f"split({p1},{p2}|{s1},{s2})", counts, point))
    return members


def q2_component_count(n: int) -> int:
    """C(n, 2) + C(n, 3) + 2 C(n, 4)"""
    return comb(n, 2) + comb(n, 3) + 2 * comb(n, 4)
