"""
Dense exact matrices over a scalar ring
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Mapping, Sequence, Tuple

from immgeo.algebra.rings import RATIONALS, ScalarRing, common_ring


@dataclass(frozen=True)
class ExactMatrix:
    """Row-major matrix whose entries all live in ``ring``"""

    rows: int
    cols: int
    entries: Tuple[Tuple, ...]
    ring: ScalarRing = RATIONALS

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} matrix")

    # -- constructors ---------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ring: ScalarRing = None) -> "ExactMatrix":
        """
        Build a matrix from nested sequences, coercing every entry into one ring

        Args:
            rows: Row-major entries (ints, Fractions, "p/q" strings or ring scalars)
            ring: Target ring; inferred from the entries when omitted
        """
        rows = [list(row) for row in rows]
        if ring is None:
            ring = common_ring([entry for row in rows for entry in row])
        width = len(rows[0]) if rows else 0
        entries = tuple(tuple(ring.coerce(entry) for entry in row) for row in rows)
        return cls(len(rows), width, entries, ring)

    @classmethod
    def zeros(cls, rows: int, cols: int, ring: ScalarRing = RATIONALS) -> "ExactMatrix":
        zero = ring.zero()
        return cls(rows, cols, tuple(tuple(zero for _ in range(cols)) for _ in range(rows)), ring)

    @classmethod
    def identity(cls, size: int, ring: ScalarRing = RATIONALS) -> "ExactMatrix":
        return cls.diagonal_matrix([ring.one()] * size, ring)

    @classmethod
    def diagonal_matrix(cls, values: Sequence, ring: ScalarRing = None) -> "ExactMatrix":
        if ring is None:
            ring = common_ring(values)
        size = len(values)
        zero = ring.zero()
        entries = tuple(
            tuple(ring.coerce(values[i]) if i == j else zero for j in range(size))
            for i in range(size)
        )
        return cls(size, size, entries, ring)

    @classmethod
    def from_sparse(cls, rows: int, cols: int, items: Mapping[Tuple[int, int], object],
                    ring: ScalarRing = RATIONALS) -> "ExactMatrix":
        """Dense matrix from a {(i, j): value} map; missing entries are zero"""
        zero = ring.zero()
        grid = [[zero] * cols for _ in range(rows)]
        for (i, j), value in items.items():
            grid[i][j] = ring.coerce(value)
        return cls(rows, cols, tuple(tuple(row) for row in grid), ring)

    # -- access ---------------------------------------------------------
    def __getitem__(self, index: Tuple[int, int]):
        i, j = index
        return self.entries[i][j]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def to_lists(self) -> List[List]:
        return [list(row) for row in self.entries]

    def diagonal(self) -> Tuple:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def with_entry(self, i: int, j: int, value) -> "ExactMatrix":
        grid = self.to_lists()
        grid[i][j] = self.ring.coerce(value)
        return ExactMatrix(self.rows, self.cols, tuple(tuple(row) for row in grid), self.ring)

    # -- predicates -----------------------------------------------------
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(e for row in self.entries for e in row)

    def is_diagonal(self) -> bool:
        return all(
            not e for i, row in enumerate(self.entries) for j, e in enumerate(row) if i != j
        )

    def is_identity(self) -> bool:
        one = self.ring.one()
        return self.is_square() and self.is_diagonal() and all(e == one for e in self.diagonal())

    # -- arithmetic -----------------------------------------------------
    def _check_same_shape(self, other: "ExactMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        entries = tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)
        )
        return ExactMatrix(self.rows, self.cols, entries, self.ring)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        entries = tuple(
            tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)
        )
        return ExactMatrix(self.rows, self.cols, entries, self.ring)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(
            self.rows, self.cols, tuple(tuple(-a for a in row) for row in self.entries), self.ring
        )

    def scale(self, factor) -> "ExactMatrix":
        factor = self.ring.coerce(factor)
        return ExactMatrix(
            self.rows, self.cols,
            tuple(tuple(factor * a for a in row) for row in self.entries), self.ring,
        )

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols, self.rows,
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
            self.ring,
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ring = self.ring if other.ring == RATIONALS else other.ring
        zero = ring.zero()
        result = []
        for row in self.entries:
            acc = [zero] * other.cols
            for k, a in enumerate(row):
                if not a:
                    continue
                for j, b in enumerate(other.entries[k]):
                    if b:
                        acc[j] = acc[j] + a * b
            result.append(tuple(acc))
        return ExactMatrix(self.rows, other.cols, tuple(result), ring)

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(e) for e in row) for row in self.entries) + "]"


def product(matrices: Iterable[ExactMatrix], size: int, ring: ScalarRing) -> ExactMatrix:
    """Left-to-right product; the empty product is the identity of ``size``"""
    result = None
    for matrix in matrices:
        result = matrix if result is None else result @ matrix
    return ExactMatrix.identity(size, ring) if result is None else result


def as_fraction_grid(matrix: ExactMatrix) -> List[List[Fraction]]:
    """Entries as Fractions; rejects quotient-ring matrices"""
    if matrix.ring != RATIONALS:
        raise ValueError(f"expected a rational matrix, got entries in {matrix.ring}")
    return [list(row) for row in matrix.entries]
