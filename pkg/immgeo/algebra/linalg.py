"""
Exact linear algebra

Rank and inverse are delegated to sympy's DomainMatrix over QQ (rank uses
fraction-free elimination after clearing denominators). Determinants over
the quotient ring use the division-free Berkowitz recurrence.
"""
from fractions import Fraction
from typing import Dict, List, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from immgeo.algebra.matrix import ExactMatrix, as_fraction_grid
from immgeo.algebra.rings import RATIONALS
from immgeo.utils.errors import NonUnitError


def _to_domain_matrix(matrix: ExactMatrix) -> DomainMatrix:
    grid = as_fraction_grid(matrix)
    return DomainMatrix(
        [[QQ(e.numerator, e.denominator) for e in row] for row in grid],
        (matrix.rows, matrix.cols),
        QQ,
    )


def _from_domain_matrix(dm: DomainMatrix) -> ExactMatrix:
    rows = [
        [Fraction(int(e.numerator), int(e.denominator)) for e in row] for row in dm.to_list()
    ]
    return ExactMatrix.from_rows(rows, RATIONALS)


def exact_rank(matrix: ExactMatrix) -> int:
    """
    Rank over Q

    Args:
        matrix: Matrix with Fraction entries

    Returns:
        The rank, computed by fraction-free Gauss-Jordan elimination

    Raises:
        ValueError: If the matrix is not over the rationals
    """
    if matrix.rows == 0 or matrix.cols == 0 or matrix.is_zero():
        as_fraction_grid(matrix)
        return 0
    _, pivots = _to_domain_matrix(matrix).rref(method='CD')
    return len(pivots)


def nullity(matrix: ExactMatrix) -> int:
    """cols - rank"""
    return matrix.cols - exact_rank(matrix)


def inverse(matrix: ExactMatrix) -> ExactMatrix:
    """
    Exact inverse of a square rational matrix

    Raises:
        NonUnitError: If the matrix is singular
    """
    if not matrix.is_square():
        raise ValueError(f"cannot invert a {matrix.rows}x{matrix.cols} matrix")
    try:
        return _from_domain_matrix(_to_domain_matrix(matrix).inv())
    except (DMNonInvertibleMatrixError, ZeroDivisionError) as exc:
        raise NonUnitError("matrix is singular", witness="det = 0") from exc


def matrix_from_rows(rows: Sequence[Dict[int, Fraction]], cols: int) -> ExactMatrix:
    """
    Dense matrix of a linear system given row-wise coefficient maps

    Args:
        rows: One {column: coefficient} map per equation
        cols: Number of unknowns
    """
    zero = Fraction(0)
    grid = []
    for coefficients in rows:
        line = [zero] * cols
        for col, value in coefficients.items():
            line[col] += value
        grid.append(tuple(line))
    return ExactMatrix(len(grid), cols, tuple(grid), RATIONALS)


def det_division_free(matrix: ExactMatrix):
    """
    Determinant without ring division (Berkowitz)

    Works over any commutative ring, including quotient rings with zero
    divisors. The trailing principal submatrices are processed from the
    bottom-right corner upward; each step multiplies the running
    characteristic vector by the Toeplitz matrix built from
    1, -a, -RC, -RAC, -RA^2C, ...

    Args:
        matrix: Square matrix over any supported ring

    Returns:
        The determinant as a ring element

    Raises:
        ValueError: If the matrix is not square
    """
    if not matrix.is_square():
        raise ValueError(f"determinant of a non-square {matrix.rows}x{matrix.cols} matrix")
    size = matrix.rows
    ring = matrix.ring
    zero, one = ring.zero(), ring.one()
    if size == 0:
        return one

    nonzero: List[List] = [
        [(j, e) for j, e in enumerate(row) if e] for row in matrix.entries
    ]

    # characteristic vector of the empty trailing block
    vector = [one]
    for k in range(size - 1, -1, -1):
        span = size - k            # size of the current trailing block
        a = matrix.entries[k][k]
        column = [matrix.entries[k + 1 + i][k] for i in range(span - 1)]

        diagonals = [one, -a]
        current = column
        for step in range(span - 1):
            rc = zero
            for j, value in nonzero[k]:
                if j > k and current[j - k - 1]:
                    rc = rc + value * current[j - k - 1]
            diagonals.append(-rc)
            if step < span - 2:
                current = _trailing_matvec(nonzero, k, current, zero)

        next_vector = []
        for i in range(span + 1):
            acc = zero
            for j in range(min(i + 1, span)):
                d = diagonals[i - j]
                if d and vector[j]:
                    acc = acc + d * vector[j]
            next_vector.append(acc)
        vector = next_vector

    return vector[size] if size % 2 == 0 else -vector[size]


def _trailing_matvec(nonzero, k, vector, zero):
    """A * v where A is the trailing block strictly below and right of (k, k)"""
    result = []
    for i in range(len(vector)):
        acc = zero
        for j, value in nonzero[k + 1 + i]:
            if j > k and vector[j - k - 1]:
                acc = acc + value * vector[j - k - 1]
        result.append(acc)
    return result
