"""Distribution primitives: construction rules, closed forms, identities."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixkit import (
    InputError,
    JointDist,
    ProbVector,
    entropy,
    gamma_matrix,
    kl_divergence,
    marginals,
    mutual_information,
    product,
    total_variation,
)
from oracles import random_joint

LOG2 = 0.6931471805599453


weight_lists = st.lists(
    st.floats(min_value=1e-6, max_value=1.0, allow_nan=False), min_size=1, max_size=8
)


def pv(*w):
    arr = np.array(w, dtype=float)
    return ProbVector(arr / arr.sum())


class TestConstruction:
    def test_negative_weight_rejected(self):
        with pytest.raises(InputError):
            ProbVector([0.5, 0.6, -0.1])

    def test_small_drift_renormalized(self):
        p = ProbVector([0.5, 0.5 + 5e-10])
        assert abs(p.weights.sum() - 1.0) < 1e-12

    def test_large_drift_rejected(self):
        with pytest.raises(InputError):
            ProbVector([0.5, 0.6])
        with pytest.raises(InputError):
            JointDist([[0.5, 0.5], [0.5, 0.5]])

    def test_values_are_immutable(self):
        p = ProbVector([0.25, 0.75])
        with pytest.raises(ValueError):
            p.weights[0] = 1.0
        t = JointDist([[0.5, 0.5]])
        with pytest.raises(ValueError):
            t.matrix[0, 0] = 0.0

    def test_joint_must_be_2d(self):
        with pytest.raises(InputError):
            JointDist([0.5, 0.5])

    def test_gamma_zero_sum_enforced(self):
        from mixkit import GammaMatrix

        with pytest.raises(InputError):
            GammaMatrix([[0.1, 0.0], [0.0, -0.1]])  # rows do not cancel


class TestMarginals:
    def test_symmetric_diagonal(self):
        mu, nu = marginals(JointDist([[0.5, 0.0], [0.0, 0.5]]))
        assert np.allclose(mu.weights, [0.5, 0.5])
        assert np.allclose(nu.weights, [0.5, 0.5])

    def test_identity_case(self):
        mu, nu = marginals(JointDist([[1.0]]))
        assert mu.weights.tolist() == [1.0]
        assert nu.weights.tolist() == [1.0]

    def test_hand_checked_sums(self):
        mu, nu = marginals(JointDist([[0.2, 0.1], [0.3, 0.4]]))
        assert np.allclose(mu.weights, [0.3, 0.7], atol=1e-15)
        assert np.allclose(nu.weights, [0.5, 0.5], atol=1e-15)


class TestProduct:
    def test_identity_case(self):
        assert product(pv(1.0), pv(1.0)).matrix.tolist() == [[1.0]]

    def test_uniform_squares(self):
        j = product(pv(0.5, 0.5), pv(0.5, 0.5))
        assert np.allclose(j.matrix, 0.25)

    def test_outer_product_values(self):
        j = product(pv(0.3, 0.7), pv(0.5, 0.5))
        assert np.allclose(j.matrix, [[0.15, 0.15], [0.35, 0.35]], atol=1e-15)

    def test_marginalization_idempotent_through_product(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            theta = JointDist(random_joint(rng, rng.integers(1, 6), rng.integers(1, 6)))
            mu, nu = marginals(theta)
            mu2, nu2 = marginals(product(mu, nu))
            np.testing.assert_allclose(mu2.weights, mu.weights, rtol=0, atol=1e-15)
            np.testing.assert_allclose(nu2.weights, nu.weights, rtol=0, atol=1e-15)


class TestTotalVariation:
    def test_identical_vectors(self):
        assert total_variation(pv(0.3, 0.7), pv(0.3, 0.7)) == 0.0

    def test_disjoint_supports(self):
        assert total_variation(pv(1.0, 0.0), pv(0.0, 1.0)) == 1.0

    def test_l1_evaluation(self):
        assert total_variation(pv(0.5, 0.5), pv(0.75, 0.25)) == pytest.approx(
            0.25, abs=1e-15
        )

    def test_length_mismatch(self):
        with pytest.raises(InputError):
            total_variation(pv(1.0), pv(0.5, 0.5))

    @settings(max_examples=200, deadline=None)
    @given(weight_lists, weight_lists, weight_lists)
    def test_triangle_inequality(self, a, b, c):
        n = max(len(a), len(b), len(c))
        a, b, c = (w + [1e-6] * (n - len(w)) for w in (a, b, c))
        p, q, r = pv(*a), pv(*b), pv(*c)
        assert total_variation(p, r) <= total_variation(p, q) + total_variation(q, r) + 1e-12
        assert total_variation(p, q) == total_variation(q, p)
        assert 0.0 <= total_variation(p, q) <= 1.0


class TestEntropy:
    def test_degenerate(self):
        assert entropy(pv(1.0, 0.0)) == 0.0

    def test_uniform(self):
        assert entropy(pv(0.5, 0.5)) == pytest.approx(LOG2, abs=1e-15)

    def test_direct_summation(self):
        # frozen from an independent term-by-term evaluation
        assert entropy(pv(0.25, 0.75)) == pytest.approx(0.5623351446188083, abs=1e-15)
        direct = -(0.25 * math.log(0.25) + 0.75 * math.log(0.75))
        assert entropy(pv(0.25, 0.75)) == pytest.approx(direct, abs=1e-15)

    def test_nonnegative(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            w = rng.random(rng.integers(1, 9))
            assert entropy(ProbVector(w / w.sum())) >= 0.0


class TestKlDivergence:
    def test_identity(self):
        p = pv(0.2, 0.3, 0.5)
        assert kl_divergence(p, p) == 0.0

    def test_single_term(self):
        assert kl_divergence(pv(1.0, 0.0), pv(0.5, 0.5)) == pytest.approx(
            LOG2, abs=1e-15
        )

    def test_support_violation_signals_infinity(self):
        assert kl_divergence(pv(0.5, 0.5), pv(1.0, 0.0)) == math.inf

    def test_shape_mismatch(self):
        with pytest.raises(InputError):
            kl_divergence(pv(1.0), pv(0.5, 0.5))

    def test_joint_arguments(self):
        p = JointDist([[0.5, 0.0], [0.0, 0.5]])
        q = JointDist([[0.25, 0.25], [0.25, 0.25]])
        assert kl_divergence(p, q) == pytest.approx(LOG2, abs=1e-15)

    def test_nonnegative_on_random_pairs(self):
        rng = np.random.default_rng(13)
        for _ in range(200):
            n = int(rng.integers(2, 8))
            p = rng.random(n) + 1e-3
            q = rng.random(n) + 1e-3
            val = kl_divergence(ProbVector(p / p.sum()), ProbVector(q / q.sum()))
            assert val >= -1e-15


class TestMutualInformation:
    def test_zero_iff_independent(self):
        theta = product(pv(0.3, 0.7), pv(0.2, 0.8))
        assert abs(mutual_information(theta)) < 1e-12

    def test_diagonal_is_log2(self):
        assert mutual_information(JointDist([[0.5, 0.0], [0.0, 0.5]])) == pytest.approx(
            LOG2, abs=1e-15
        )

    def test_equals_kl_to_product(self):
        rng = np.random.default_rng(3)
        for _ in range(1000):
            theta = JointDist(random_joint(rng, 3, 3))
            mu, nu = marginals(theta)
            assert mutual_information(theta) == pytest.approx(
                kl_divergence(theta, product(mu, nu)), abs=1e-12
            )

    def test_nonnegative_within_tolerance(self):
        rng = np.random.default_rng(5)
        for _ in range(300):
            theta = JointDist(random_joint(rng, rng.integers(2, 6), rng.integers(2, 6)))
            assert mutual_information(theta) >= -1e-12


class TestGammaMatrix:
    def test_independent_gives_zero(self):
        theta = product(pv(0.3, 0.7), pv(0.2, 0.8))
        assert np.abs(gamma_matrix(theta).matrix).max() < 1e-14

    def test_diagonal_values(self):
        gam = gamma_matrix(JointDist([[0.5, 0.0], [0.0, 0.5]]))
        assert np.allclose(gam.matrix, [[0.25, -0.25], [-0.25, 0.25]], atol=1e-15)

    def test_rows_and_columns_cancel(self):
        rng = np.random.default_rng(17)
        for _ in range(300):
            theta = JointDist(random_joint(rng, rng.integers(1, 7), rng.integers(1, 7)))
            gam = gamma_matrix(theta).matrix
            assert np.abs(gam.sum(axis=0)).max() < 1e-12
            assert np.abs(gam.sum(axis=1)).max() < 1e-12
