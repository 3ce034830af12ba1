"""Partition instances, the diagonal embedding, and oracle agreement."""

import numpy as np
import pytest

from mixkit import (
    InputError,
    PartitionInstance,
    ProbVector,
    SizeRefusalError,
    alpha_bruteforce,
    marginals,
    partition_to_joint,
    random_dyadic_instance,
    reduction_roundtrip,
    subset_sum_half,
)
from oracles import subset_masks, subset_sum_oracle


def instance(*w):
    return PartitionInstance(ProbVector(np.array(w)))


class TestInstances:
    def test_zero_weight_rejected(self):
        with pytest.raises(InputError):
            instance(0.5, 0.5, 0.0)

    def test_dyadic_generator_is_exact(self):
        rng = np.random.default_rng(301)
        for _ in range(50):
            inst = random_dyadic_instance(int(rng.integers(2, 13)), rng)
            scaled = inst.weights.weights * 65536
            assert np.array_equal(scaled, np.round(scaled))  # exactly dyadic
            assert inst.weights.weights.sum() == 1.0  # no rounding at all
            assert np.all(inst.weights.weights > 0)


class TestDiagonalEmbedding:
    @pytest.mark.parametrize(
        "weights",
        [(0.5, 0.5), (0.5, 0.25, 0.25), (0.6, 0.2, 0.2)],
    )
    def test_diagonal_construction(self, weights):
        joint = partition_to_joint(instance(*weights))
        assert np.allclose(joint.matrix, np.diag(weights), atol=1e-15)
        mu, nu = marginals(joint)
        assert np.allclose(mu.weights, weights, atol=1e-15)
        assert np.allclose(nu.weights, weights, atol=1e-15)
        assert np.trace(joint.matrix) == pytest.approx(1.0, abs=1e-12)  # X = Y a.s.

    def test_rectangle_probability_is_intersection_mass(self):
        rng = np.random.default_rng(303)
        inst = random_dyadic_instance(8, rng)
        joint = partition_to_joint(inst).matrix
        a = inst.weights.weights
        for _ in range(200):
            s = rng.random(8) < 0.5
            t = rng.random(8) < 0.5
            lhs = joint[np.ix_(s, t)].sum() if s.any() and t.any() else 0.0
            assert lhs == pytest.approx(a[s & t].sum(), abs=1e-15)


class TestSubsetSumHalf:
    def test_fixed_cases(self):
        assert subset_sum_half(instance(0.5, 0.25, 0.25))
        assert not subset_sum_half(instance(0.6, 0.2, 0.2))
        assert subset_sum_half(instance(0.5, 0.5))

    def test_size_refusal(self):
        with pytest.raises(SizeRefusalError):
            subset_sum_half(instance(*([1.0 / 40] * 40)))

    def test_agrees_with_plain_enumeration(self):
        rng = np.random.default_rng(307)
        for _ in range(100):
            inst = random_dyadic_instance(int(rng.integers(2, 13)), rng)
            assert subset_sum_half(inst) == subset_sum_oracle(
                inst.weights.weights, 0.5
            )


class TestRoundtrip:
    def test_fixed_positive_case(self):
        inst = instance(0.5, 0.25, 0.25)
        assert reduction_roundtrip(inst)
        assert alpha_bruteforce(partition_to_joint(inst)) == pytest.approx(
            0.25, abs=1e-12
        )

    def test_fixed_negative_case(self):
        inst = instance(0.6, 0.2, 0.2)
        assert not reduction_roundtrip(inst)
        assert alpha_bruteforce(partition_to_joint(inst)) < 0.25 - 1e-6

    def test_random_instances_agree(self):
        rng = np.random.default_rng(311)
        for _ in range(60):
            inst = random_dyadic_instance(int(rng.integers(2, 11)), rng)
            reduction_roundtrip(inst)  # raises on oracle disagreement

    def test_quarter_is_never_exceeded(self):
        rng = np.random.default_rng(313)
        for _ in range(60):
            inst = random_dyadic_instance(int(rng.integers(2, 11)), rng)
            alpha = alpha_bruteforce(partition_to_joint(inst))
            assert alpha <= 0.25 + 1e-12
            if abs(alpha - 0.25) <= 1e-12:
                assert subset_sum_half(inst)  # equality needs a witness

    def test_equal_split_attains_quarter_with_witness(self):
        # attaining 1/4 requires *some* pair with half-mass sets and an
        # empty rectangle: here S and its complement
        inst = instance(0.25, 0.25, 0.25, 0.25)
        joint = partition_to_joint(inst).matrix
        a = inst.weights.weights
        best = 0.0
        witnessed = False
        for s in subset_masks(4):
            for t in subset_masks(4):
                if not (s.any() and t.any()):
                    continue
                rect = joint[np.ix_(s, t)].sum()
                val = abs(rect - a[s].sum() * a[t].sum())
                best = max(best, val)
                if (
                    abs(a[s].sum() - 0.5) <= 1e-12
                    and abs(a[t].sum() - 0.5) <= 1e-12
                    and rect <= 1e-12
                ):
                    witnessed = True
        assert best == pytest.approx(0.25, abs=1e-12)
        assert witnessed
