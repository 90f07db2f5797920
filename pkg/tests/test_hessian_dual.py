import pytest

from immgeo.algebra.matrix import ExactMatrix
from immgeo.algebra.rings import a_coefficient
from immgeo.geometry.hessian_dual import (
    closed_form_inverse, column_position, displayed_hessian_block, dual_dimension,
    dual_dimension_report, hessian_at, hessian_matrix, hessian_unit_check, inverse_block_diagonal,
    row_position, sample_hypersurface_point, segre_point, verify_hessian_inverse,
)
from immgeo.geometry.imm_poly import MatTuple, VarIndex, evaluate, gradient
from immgeo.utils.errors import DegenerateFormula, GuardExceeded, InputError


class TestSegrePoint:
    @pytest.mark.parametrize("n,q", [(2, 2), (3, 2), (3, 3), (4, 3)])
    def test_lies_on_the_hypersurface(self, n, q):
        assert not evaluate(segre_point(n, q))

    def test_needs_q_at_least_two(self):
        with pytest.raises(InputError):
            segre_point(3, 1)


class TestHessianAtSegrePoint:
    @pytest.mark.parametrize("n,q", [(3, 2), (3, 3), (4, 2)])
    def test_block_structure(self, n, q):
        hessian = hessian_at(segre_point(n, q))
        assert hessian.all_blocks_diagonal()
        assert hessian.is_block_toeplitz()
        assert hessian.block(1, 1).is_zero()

    @pytest.mark.parametrize("n,q", [(3, 2), (3, 3), (4, 3), (5, 2)])
    def test_matches_displayed_blocks(self, n, q):
        hessian = hessian_at(segre_point(n, q))
        for beta in range(1, n + 1):
            diagonal = hessian.block(1, beta).diagonal()
            for k in range(1, q + 1):
                assert diagonal[(k - 1) * q:k * q] == displayed_hessian_block(n, q, beta, k)

    def test_full_matrix_shape(self):
        full = hessian_matrix(segre_point(3, 2))
        assert full.shape == (12, 12)
        assert not full.is_zero()

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            hessian_matrix(segre_point(3, 3), guard=20)


class TestClosedFormInverse:
    @pytest.mark.parametrize("n,q", [(3, 3), (3, 4), (4, 2), (4, 3), (5, 3), (6, 2)])
    def test_inverts_the_hessian(self, n, q):
        assert verify_hessian_inverse(n, q)

    @pytest.mark.parametrize("n,q", [(3, 2), (5, 2), (2, 3)])
    def test_degenerate_parameters(self, n, q):
        with pytest.raises(DegenerateFormula):
            closed_form_inverse(n, q)
        with pytest.raises(DegenerateFormula):
            verify_hessian_inverse(n, q)

    def test_inner_entries_are_rational(self):
        inner = inverse_block_diagonal(4, 3, 2, 1)[0]
        assert inner.is_constant()
        assert inner == inverse_block_diagonal(4, 3, 3, 2)[0]


class TestUnitCheck:
    def test_singular_for_q2_and_odd_n(self):
        assert hessian_unit_check(3, 2) is False

    @pytest.mark.parametrize("n,q", [(2, 2), (3, 3), (4, 2)])
    def test_unit_determinant(self, n, q):
        assert hessian_unit_check(n, q) is True


class TestDualDimension:
    def test_sampler(self, rng):
        point = sample_hypersurface_point(3, 2, rng=rng)
        assert evaluate(point) == 0
        assert any(not block.is_zero() for block in gradient(point))

    @pytest.mark.parametrize("n,q,expected", [(2, 2, 6), (3, 3, 25), (4, 2, 14), (4, 3, 34)])
    def test_dual_is_a_hypersurface(self, n, q, expected):
        report = dual_dimension_report(n, q, trials=5, seed=1)
        assert report.dimension == expected
        assert report.is_hypersurface

    def test_q2_odd_n_drops_by_two(self):
        assert dual_dimension(3, 2, trials=5, seed=1) == 8

    def test_needs_two_matrices(self):
        with pytest.raises(InputError):
            dual_dimension(1, 2)


def unit_block(q, i, j):
    return ExactMatrix.from_sparse(q, q, {(i - 1, j - 1): 1})


INVERTIBLE_GRID = [
    (n, q) for n in range(3, 7) for q in range(2, 5) if a_coefficient(n, q) != 0
]


class TestAgainstDefinitions:
    @pytest.mark.slow
    @pytest.mark.parametrize("n,q", INVERTIBLE_GRID)
    def test_inverse_over_the_grid(self, n, q):
        assert verify_hessian_inverse(n, q)

    def test_grid_skips_exactly_the_vanishing_a_n(self):
        skipped = {(n, q) for n in range(3, 7) for q in range(2, 5)} - set(INVERTIBLE_GRID)
        assert skipped == {(3, 2), (5, 2)}

    @pytest.mark.parametrize("n,q", [(2, 2), (3, 2), (2, 3), (3, 3)])
    def test_hessian_entries_are_bilinear_coefficients(self, rng, n, q):
        point = MatTuple.random(n, q, rng)
        full = hessian_matrix(point)
        variables = [
            VarIndex(alpha, i, j)
            for alpha in range(1, n + 1) for i in range(1, q + 1) for j in range(1, q + 1)
        ]
        for u in variables:
            for v in variables:
                expected = 0
                if u.alpha != v.alpha:
                    marked = point.replace(u.alpha, unit_block(q, u.i, u.j))
                    marked = marked.replace(v.alpha, unit_block(q, v.i, v.j))
                    expected = evaluate(marked)
                assert full[row_position(u, q), column_position(v, q)] == expected

    @pytest.mark.parametrize("n,q", [(2, 2), (3, 2), (3, 3), (4, 3)])
    def test_gradient_at_segre_point(self, n, q):
        p = segre_point(n, q)
        w = p.ring.generator()
        expected = ExactMatrix.diagonal_matrix([p.ring.one()] * (q - 1) + [w ** (n - 1)], p.ring)
        assert all(block == expected for block in gradient(p))


class TestHypersurfaceSampler:
    def test_seeded_sample_is_reproducible(self):
        first = sample_hypersurface_point(3, 2, seed=1)
        assert first == sample_hypersurface_point(3, 2, seed=1)
        assert evaluate(first) == 0
        assert first != sample_hypersurface_point(3, 2, seed=2)

    def test_zero_trials_is_an_input_error(self):
        with pytest.raises(InputError):
            dual_dimension_report(3, 3, trials=0, seed=1)

    def test_explicit_zero_guard_is_honoured(self):
        with pytest.raises(GuardExceeded):
            dual_dimension_report(2, 2, trials=1, seed=1, guard=0)
