import pytest

from immgeo.algebra.linalg import exact_rank
from immgeo.geometry.imm_poly import MatTuple, jac_n2_residuals
from immgeo.geometry.quiver_sing import is_singular_point
from immgeo.geometry.jacobian_locus import (
    ChartPoint, canonical_label, containment_violations, jac_components, jac_dim_oracle,
    jac_dimension, jac_representative, jacobian_locus_dim, satisfies_component,
)
from immgeo.utils.errors import InputError


class TestDimensions:
    def test_formula(self):
        assert jac_dimension(2, 1) == 5
        assert jac_dimension(3, 1) == jac_dimension(3, 2) == 11
        assert jac_dimension(4, 2) == 20
        assert jac_dimension(3, 0) == jac_dimension(3, 3) == 9

    @pytest.mark.parametrize("q,expected", [(2, 5), (3, 11), (4, 20)])
    def test_locus_dimension(self, q, expected):
        assert jacobian_locus_dim(3, q) == expected
        assert jacobian_locus_dim(5, q) == expected

    @pytest.mark.parametrize("q", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow), pytest.param(5, marks=pytest.mark.slow)])
    def test_chart_oracle(self, q):
        for r in range(0, q + 1):
            assert jac_dim_oracle(q, r, seed=3) == jac_dimension(q, r)

    def test_chart_image_is_annihilating(self, rng):
        chart = ChartPoint.random(4, 2, rng)
        x, y = chart.image()
        assert (y @ x).is_zero()
        assert exact_rank(x) <= 2
        assert chart.jacobian().shape == (32, chart.parameter_count)


class TestComponents:
    @pytest.mark.parametrize("n,q", [(3, 2), (4, 2), (3, 3)])
    def test_count_and_membership(self, n, q):
        components = jac_components(n, q)
        assert len(components) == n * q
        assert len({c.label for c in components}) == n * q
        for c in components:
            assert not any(jac_n2_residuals(c.representative))
            assert satisfies_component(c.representative, c.alpha, c.r) == (True, None)

    def test_label_identification(self):
        assert canonical_label(1, 0, 3, 2) == (2, 2)
        assert canonical_label(3, 0, 3, 2) == (1, 2)
        assert canonical_label(4, 1, 3, 2) == (1, 1)
        assert jac_representative(1, 0, 3, 2) == jac_representative(2, 2, 3, 2)

    @pytest.mark.parametrize("n,q", [(3, 2), (4, 3)])
    def test_components_are_not_nested(self, n, q):
        violations = containment_violations(n, q)
        assert len(violations) == n * q * (n * q - 1)
        assert all(reason is not None for reason in violations.values())

    def test_violated_conditions(self):
        point = jac_representative(2, 1, 3, 2)
        assert satisfies_component(point, 2, 2) == (False, "rk X2 > 0")
        assert satisfies_component(point, 3, 1) == (False, "X1 != 0")
        nonzero = MatTuple.identity(3, 2)
        ok, reason = satisfies_component(nonzero, 1, 1)
        assert not ok and reason == "X2 != 0"

    @pytest.mark.parametrize("n,q", [(3, 2), (4, 2), (3, 3)])
    def test_identity_tuple_is_outside_both_loci(self, n, q):
        identity = MatTuple.identity(n, q)
        assert not is_singular_point(identity)
        assert any(jac_n2_residuals(identity))
        for c in jac_components(n, q):
            ok, reason = satisfies_component(identity, c.alpha, c.r)
            assert not ok and reason is not None

    def test_needs_three_matrices(self):
        with pytest.raises(InputError):
            jac_components(2, 2)
        with pytest.raises(InputError):
            jacobian_locus_dim(2, 3)
