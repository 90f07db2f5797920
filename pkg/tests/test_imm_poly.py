from fractions import Fraction

import pytest

from immgeo.algebra.matrix import ExactMatrix
from immgeo.geometry.imm_poly import (
    MatTuple, VarIndex, coordinate_expansion, evaluate, evaluate_expansion, gradient,
    jac_n2_residuals, orbit_dimension, scalar_tuple_scaling, second_partial,
)
from immgeo.utils.errors import GuardExceeded
from immgeo.utils.sampling import random_rational_grid


def unit_matrix(q, i, j):
    return ExactMatrix.from_sparse(q, q, {(i, j): 1})


class TestEvaluate:
    def test_identity_tuple(self, identity_point):
        assert evaluate(identity_point) == 2

    def test_order_of_the_product(self):
        # trace(X2 X1) with X1 = E12, X2 = E21 is 1; the reversed product would give 0
        point = MatTuple.from_blocks([unit_matrix(2, 0, 1), unit_matrix(2, 1, 0)])
        assert evaluate(point) == 1
        point = MatTuple.from_blocks([[[0, 1], [0, 0]], [[0, 0], [0, 0]], [[1, 0], [0, 1]]])
        assert evaluate(point) == 0

    def test_single_matrix_is_the_trace(self):
        point = MatTuple.from_blocks([[[Fraction(1, 2), 7], [3, Fraction(-5, 2)]]])
        assert evaluate(point) == -2

    def test_agrees_with_coordinate_expansion(self, rng):
        for n, q in ((1, 3), (2, 2), (3, 2), (4, 2), (3, 3)):
            expansion = coordinate_expansion(n, q)
            assert len(expansion) == q ** n
            point = MatTuple.random(n, q, rng)
            assert evaluate_expansion(point, expansion) == evaluate(point)

    def test_expansion_guard(self):
        with pytest.raises(GuardExceeded):
            coordinate_expansion(3, 2, guard=4)

    def test_explicit_zero_guard(self):
        with pytest.raises(GuardExceeded):
            coordinate_expansion(1, 1, guard=0)
        with pytest.raises(GuardExceeded):
            orbit_dimension(MatTuple.zeros(1, 1), guard=0)


class TestDerivatives:
    def test_gradient_is_the_coefficient_of_each_entry(self, random_point):
        # IMM is linear in every block
        grads = gradient(random_point)
        for alpha in range(1, 4):
            for i in range(2):
                for j in range(2):
                    marked = random_point.replace(alpha, unit_matrix(2, i, j))
                    assert grads[alpha - 1][i, j] == evaluate(marked)

    def test_second_partial_is_bilinear_coefficient(self, rng):
        point = MatTuple.random(4, 2, rng)
        for u in (VarIndex(1, 1, 2), VarIndex(2, 2, 2), VarIndex(4, 2, 1)):
            for v in (VarIndex(1, 2, 1), VarIndex(3, 1, 1), VarIndex(2, 1, 2)):
                expected = 0
                if u.alpha != v.alpha:
                    marked = point.replace(u.alpha, unit_matrix(2, u.i - 1, u.j - 1))
                    marked = marked.replace(v.alpha, unit_matrix(2, v.i - 1, v.j - 1))
                    expected = evaluate(marked)
                assert second_partial(point, u, v) == expected

    @pytest.mark.parametrize("n,q", [(2, 2), (3, 2), (4, 2), (3, 3)])
    def test_linear_in_each_block(self, rng, n, q):
        point = MatTuple.random(n, q, rng)
        for alpha in range(1, n + 1):
            a = ExactMatrix.from_rows(random_rational_grid(rng, q, q))
            b = ExactMatrix.from_rows(random_rational_grid(rng, q, q))
            s, t = Fraction(3, 7), Fraction(-2)
            combined = point.replace(alpha, a.scale(s) + b.scale(t))
            expected = s * evaluate(point.replace(alpha, a)) + t * evaluate(point.replace(alpha, b))
            assert evaluate(combined) == expected

    @pytest.mark.parametrize("n,q", [(3, 2), (2, 3)])
    def test_second_partial_is_symmetric(self, rng, n, q):
        point = MatTuple.random(n, q, rng)
        variables = [
            VarIndex(alpha, i, j)
            for alpha in range(1, n + 1) for i in range(1, q + 1) for j in range(1, q + 1)
        ]
        for u in variables:
            for v in variables:
                assert second_partial(point, u, v) == second_partial(point, v, u)

    def test_out_of_range_index(self, random_point):
        with pytest.raises(ValueError):
            second_partial(random_point, VarIndex(4, 1, 1), VarIndex(1, 1, 1))


class TestScalingAndOrbits:
    def test_scaling_multiplies_by_the_product(self, random_point):
        factors = [Fraction(2), Fraction(-1, 3), Fraction(5, 4)]
        scaled = scalar_tuple_scaling(random_point, factors)
        assert evaluate(scaled) == evaluate(random_point) * Fraction(-5, 6)

    def test_orbit_of_the_origin(self):
        assert orbit_dimension(MatTuple.zeros(3, 2)) == 0

    def test_orbit_of_identities(self):
        # (g2 g1^-1, g1 g2^-1): the stabilizer is the diagonal copy of GL(2)
        assert orbit_dimension(MatTuple.identity(2, 2)) == 4

    def test_orbit_guard(self):
        with pytest.raises(GuardExceeded):
            orbit_dimension(MatTuple.identity(3, 3), guard=10)


class TestJacobianResiduals:
    def test_zero_point(self):
        assert not any(jac_n2_residuals(MatTuple.zeros(4, 2)))

    def test_nonadjacent_products_are_included(self):
        point = MatTuple.zeros(4, 2).replace(1, unit_matrix(2, 0, 0)).replace(3, unit_matrix(2, 1, 1))
        assert any(jac_n2_residuals(point))

    def test_adjacent_annihilating_pair(self):
        point = MatTuple.zeros(4, 2).replace(1, unit_matrix(2, 0, 0)).replace(2, unit_matrix(2, 1, 1))
        assert not any(jac_n2_residuals(point))
