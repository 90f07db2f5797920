from fractions import Fraction

import pytest

from immgeo.algebra.matrix import ExactMatrix
from immgeo.geometry.imm_poly import MatTuple, evaluate
from immgeo.geometry.symmetry import (
    Composite, CyclicShift, LieElement, MarkedDiagramSet, PhiTuple, SlotTranspose, TransposeReversal,
    characterization_sweep, check_invariance, compose, dynkin_stabilizer, invariant_space_dim,
    lie_annihilates, multidegree_dimension, multidegrees, random_invertible, random_phi_tuple,
    random_word, scalar_phi, standard_generators,
)
from immgeo.utils.errors import GuardExceeded, InputError


class TestGroupElements:
    @pytest.mark.parametrize("n,q", [(3, 2), (4, 2), (3, 3), (5, 2)])
    def test_generators_preserve_imm(self, rng, n, q):
        for g in standard_generators(n, q, rng):
            assert check_invariance(g, n, q, trials=5, seed=7)

    def test_random_words_preserve_imm(self, rng):
        generators = standard_generators(3, 2, rng)
        for _ in range(10):
            word = random_word(generators, int(rng.integers(1, 6)), rng)
            assert check_invariance(word, 3, 2, trials=3, seed=11)

    def test_slot_transpose_is_not_a_symmetry(self):
        assert not check_invariance(SlotTranspose(1), 3, 2, trials=5, seed=3)

    def test_zero_trials_is_an_input_error(self):
        with pytest.raises(InputError):
            check_invariance(SlotTranspose(1), 3, 2, trials=0, seed=3)
        with pytest.raises(InputError):
            lie_annihilates(LieElement(1, ExactMatrix.identity(2)), 3, 2, trials=0, seed=3)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [3, 4, 5])
    @pytest.mark.parametrize("q", [2, 3])
    def test_generators_and_words_over_the_grid(self, rng, n, q):
        generators = standard_generators(n, q, rng)
        for g in generators:
            assert check_invariance(g, n, q, trials=20, seed=n * 10 + q)
        for index in range(100):
            word = random_word(generators, int(rng.integers(1, 8)), rng)
            assert check_invariance(word, n, q, trials=20, seed=index)

    def test_scalar_tuple_acts_trivially(self, random_point):
        assert scalar_phi(3, 2, Fraction(7, 3)).apply(random_point) == random_point

    def test_phi_tuple_needs_invertible_entries(self):
        singular = ExactMatrix.from_rows([[1, 1], [1, 1]])
        with pytest.raises(InputError):
            PhiTuple([singular, ExactMatrix.identity(2)])

    def test_phi_tuple_action(self, rng, random_point):
        g = random_phi_tuple(3, 2, rng)
        image = g.apply(random_point)
        # X_1 -> g_2 X_1 g_1^-1
        assert image.block(1) == g.matrices[1] @ random_point.block(1) @ g.inverses[0]
        assert evaluate(image) == evaluate(random_point)

    def test_compose_applies_right_factor_first(self, random_point):
        rho, tau = CyclicShift(1), TransposeReversal()
        assert compose(rho, tau).apply(random_point) == rho.apply(tau.apply(random_point))

    def test_dihedral_relations(self, rng):
        point = MatTuple.random(5, 2, rng)
        rho, tau = CyclicShift(1), TransposeReversal()
        assert Composite([rho] * 5).apply(point) == point
        assert Composite((tau, rho, tau)).apply(point) == CyclicShift(-1).apply(point)
        assert Composite((tau, tau)).apply(point) == point

    def test_random_invertible_has_full_rank(self, rng):
        m = random_invertible(3, rng)
        assert PhiTuple([m]).inverses[0] @ m == ExactMatrix.identity(3)


class TestLieAlgebra:
    def test_identity_and_random_elements_annihilate(self, rng):
        for alpha in (1, 2, 3):
            for L in (ExactMatrix.identity(2), random_invertible(2, rng)):
                assert lie_annihilates(LieElement(alpha, L), 3, 2, trials=4, seed=5)

    def test_one_sided_field_does_not_annihilate(self):
        element = LieElement(2, ExactMatrix.identity(2))
        assert not lie_annihilates(element, 3, 2, trials=4, seed=5, compensate=False)


class TestCharacterization:
    def test_multidegrees(self):
        degrees = multidegrees(3)
        assert len(degrees) == 10
        assert degrees[0] == (3, 0, 0)
        assert degrees[-1] == (0, 0, 3)
        assert all(sum(a) == 3 for a in degrees)

    def test_multidegree_dimension(self):
        assert multidegree_dimension(2, (1, 1, 1)) == 64
        assert multidegree_dimension(2, (2, 1, 0)) == 10 * 4

    @pytest.mark.parametrize("n,q", [(3, 2), (4, 2), (3, 3)])
    def test_only_the_trace_is_invariant(self, n, q):
        assert invariant_space_dim(n, q, (1,) * n) == 1
        others = [(n,) + (0,) * (n - 1), (2,) + (1,) * (n - 3) + (0, 1), (0,) * (n - 1) + (n,)]
        for multidegree in others:
            assert invariant_space_dim(n, q, multidegree) == 0

    def test_sweep(self):
        sweep = characterization_sweep(3, 2)
        assert sweep[(1, 1, 1)] == 1
        assert sum(sweep.values()) == 1
        assert len(sweep) == 10

    def test_malformed_multidegree(self):
        with pytest.raises(InputError):
            invariant_space_dim(3, 2, (1, 1))
        with pytest.raises(InputError):
            invariant_space_dim(3, 2, (2, 2, 0))

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            invariant_space_dim(3, 2, (1, 1, 1), guard=10)


class TestDynkinStabilizer:
    @pytest.mark.parametrize("n", [3, 4, 5, 6, pytest.param(7, marks=pytest.mark.slow)])
    @pytest.mark.parametrize("q", [3, 4])
    def test_dihedral_of_order_2n(self, n, q):
        stabilizer = dynkin_stabilizer(n, q)
        assert stabilizer.order == 2 * n
        assert stabilizer.is_dihedral
        assert not stabilizer.flips_trivial

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_q2_flips_are_trivial(self, n):
        stabilizer = dynkin_stabilizer(n, 2)
        assert stabilizer.flips_trivial
        assert stabilizer.order == 2 * n * 2 ** n
        assert stabilizer.image_order == 2 * n
        assert stabilizer.image_is_dihedral

    def test_diagrams_need_two_marks(self):
        with pytest.raises(InputError):
            MarkedDiagramSet.build(3, 1)

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            dynkin_stabilizer(6, 3, guard=1000)
