from fractions import Fraction

import pytest
from sympy import Matrix, Rational

from immgeo.algebra.linalg import det_division_free, exact_rank, inverse, matrix_from_rows, nullity
from immgeo.algebra.matrix import ExactMatrix
from immgeo.algebra.rings import QuotientRing, QuotientScalar, a_coefficient, gcd_witness, is_unit
from immgeo.utils.errors import NonUnitError
from immgeo.utils.sampling import random_rational, random_rational_grid
from immgeo.utils.serialization import serialize_scalar


def random_scalar(ring, rng):
    return QuotientScalar(tuple(random_rational(rng) for _ in range(ring.n)), ring)


def cofactor_det(rows, ring):
    if not rows:
        return ring.one()
    total = ring.zero()
    for j, entry in enumerate(rows[0]):
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = entry * cofactor_det(minor, ring)
        total = total + term if j % 2 == 0 else total - term
    return total


class TestQuotientRing:
    def test_generator_is_a_root_of_the_modulus(self):
        ring = QuotientRing(3, 3)
        w = ring.generator()
        assert w ** 3 == -2
        assert w ** 3 + 2 == ring.zero()

    def test_reduction_wraps_high_powers(self):
        ring = QuotientRing(2, 4)
        w = ring.generator()
        assert w ** 4 == 9
        assert (w * w * w).coefficients == (Fraction(0), Fraction(-3))

    def test_generator_is_a_unit(self):
        ring = QuotientRing(4, 3)
        w = ring.generator()
        unit, inv = is_unit(w)
        assert unit
        assert w * inv == ring.one()
        assert w / w == ring.one()

    def test_zero_divisor_reports_gcd_witness(self):
        # t^3 + 1 = (t + 1)(t^2 - t + 1)
        ring = QuotientRing(3, 2)
        s = ring.generator() + 1
        assert is_unit(s) == (False, None)
        assert gcd_witness(s) == "t + 1"
        with pytest.raises(NonUnitError) as excinfo:
            s.inverse()
        assert excinfo.value.witness == "t + 1"

    def test_zero_is_not_a_unit(self):
        unit, _ = is_unit(QuotientRing(2, 2).zero())
        assert not unit

    def test_rationals_embed(self):
        ring = QuotientRing(3, 5)
        assert ring.one() * Fraction(1, 2) + Fraction(1, 2) == 1
        assert 3 - ring.one() == ring.constant(2)


    @pytest.mark.parametrize("n,q", [(1, 3), (2, 2), (3, 2), (3, 3), (4, 5)])
    def test_ring_axioms(self, rng, n, q):
        ring = QuotientRing(n, q)
        for _ in range(10):
            a, b, c = (random_scalar(ring, rng) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert a - a == ring.zero()
            assert a * ring.one() == a

    @pytest.mark.parametrize("n,q", [(2, 2), (3, 2), (3, 3), (5, 4)])
    def test_units_invert(self, rng, n, q):
        ring = QuotientRing(n, q)
        units = 0
        for _ in range(10):
            s = random_scalar(ring, rng)
            unit, inv = is_unit(s)
            if unit:
                units += 1
                assert s * inv == ring.one()
                assert s / s == ring.one()
            else:
                assert inv is None
        assert units > 0

class TestACoefficient:
    def test_values(self):
        assert a_coefficient(3, 2) == 0
        assert a_coefficient(4, 2) == 1
        assert a_coefficient(3, 3) == 1
        assert a_coefficient(4, 3) == 3

    def test_always_an_integer(self):
        for n in range(1, 51):
            for q in range(2, 11):
                assert a_coefficient(n, q).denominator == 1


class TestLinearAlgebra:
    def test_rank_of_dependent_rows(self):
        m = ExactMatrix.from_rows([[1, 2, 3], [2, 4, 6], [Fraction(1, 2), 1, Fraction(3, 2)]])
        assert exact_rank(m) == 1
        assert nullity(m) == 2

    def test_rank_of_empty_and_zero(self):
        assert exact_rank(ExactMatrix.zeros(3, 4)) == 0
        assert exact_rank(matrix_from_rows([], 3)) == 0

    def test_rank_rejects_quotient_entries(self):
        ring = QuotientRing(2, 2)
        with pytest.raises(ValueError):
            exact_rank(ExactMatrix.identity(2, ring))

    def test_inverse(self):
        m = ExactMatrix.from_rows([[2, 1], [Fraction(1, 3), 1]])
        assert (m @ inverse(m)).is_identity()

    def test_inverse_of_singular_matrix(self):
        with pytest.raises(NonUnitError):
            inverse(ExactMatrix.from_rows([[1, 2], [2, 4]]))

    def test_rank_of_a_product(self, rng):
        for inner in (1, 2, 3, 4):
            a = ExactMatrix.from_rows(random_rational_grid(rng, 4, inner))
            b = ExactMatrix.from_rows(random_rational_grid(rng, inner, 5))
            assert exact_rank(a @ b) <= min(exact_rank(a), exact_rank(b))
        square = ExactMatrix.from_rows(random_rational_grid(rng, 3, 3))
        dependent = ExactMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
        assert exact_rank(square @ dependent) <= 2

    def test_matrix_from_rows_accumulates(self):
        m = matrix_from_rows([{0: Fraction(1), 2: Fraction(-1)}, {1: Fraction(3)}], 3)
        assert m.to_lists() == [[1, 0, -1], [0, 3, 0]]


class TestDivisionFreeDeterminant:
    def test_small_rational(self):
        assert det_division_free(ExactMatrix.from_rows([[2, 1], [1, 3]])) == 5
        assert det_division_free(ExactMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 10]])) == -3
        assert det_division_free(ExactMatrix.zeros(0, 0)) == 1

    def test_agrees_with_sympy(self, rng):
        for size in (1, 2, 4, 5):
            grid = random_rational_grid(rng, size, size)
            expected = Matrix([[Rational(e.numerator, e.denominator) for e in row] for row in grid]).det()
            value = det_division_free(ExactMatrix.from_rows(grid))
            assert value == Fraction(int(expected.p), int(expected.q))

    def test_zero_pivot_needs_no_division(self):
        # the leading entry is zero; elimination would have to pivot
        assert det_division_free(ExactMatrix.from_rows([[0, 1], [1, 0]])) == -1

    def test_over_the_quotient_ring(self):
        ring = QuotientRing(3, 2)
        w = ring.generator()
        m = ExactMatrix.from_rows([[w, 1], [0, w + 1]], ring)
        assert det_division_free(m) == w * w + w

    @pytest.mark.parametrize("size", [1, 2, 3, 4])
    @pytest.mark.parametrize("n,q", [(2, 2), (3, 2), (3, 3)])
    def test_agrees_with_cofactor_expansion_over_the_quotient_ring(self, rng, size, n, q):
        ring = QuotientRing(n, q)
        rows = [[random_scalar(ring, rng) for _ in range(size)] for _ in range(size)]
        assert det_division_free(ExactMatrix.from_rows(rows, ring)) == cofactor_det(rows, ring)

    def test_non_square(self):
        with pytest.raises(ValueError):
            det_division_free(ExactMatrix.zeros(2, 3))


class TestScalarText:
    def test_rational(self):
        assert serialize_scalar(Fraction(-3, 6)) == "-1/2"
        assert serialize_scalar(Fraction(4)) == "4"

    def test_quotient_scalar_carries_its_modulus(self):
        ring = QuotientRing(3, 2)
        value = ring.generator() * Fraction(2, 3) + 1
        assert serialize_scalar(value) == {"coefficients": ["1", "2/3", "0"], "modulus": {"n": 3, "q": 2}}
