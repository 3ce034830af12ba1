"""Equal-sum partition instances as hard cases for exact alpha.

A weight vector a with sum 1 maps to the diagonal joint ``theta = diag(a)``
(so X = Y almost surely).  That joint attains the universal maximum
alpha = 1/4 precisely when the weights split into two halves of mass 1/2 —
the partition problem — which is what makes thresholding alpha NP-complete.
This module provides the instance generator, the diagonal embedding, an
independent meet-in-the-middle subset-sum oracle, and the cross-check that
ties them together.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError, MixkitError, SizeRefusalError
from .mixing import alpha_bruteforce
from .prob import JointDist, ProbVector

SUBSET_SUM_LIMIT = 30
EQUALITY_TOL = 1e-12


@dataclass(frozen=True)
class PartitionInstance:
    """Strictly positive weights summing to one."""

    weights: ProbVector

    def __post_init__(self):
        if np.any(self.weights.weights <= 0):
            raise InputError("partition weights must be strictly positive")

    @property
    def m(self) -> int:
        return len(self.weights)


def partition_to_joint(instance: PartitionInstance) -> JointDist:
    """Diagonal joint with the instance weights: both marginals equal a, X = Y."""
    return JointDist(np.diag(instance.weights.weights))


def subset_sum_half(instance: PartitionInstance, tol: float = EQUALITY_TOL) -> bool:
    """Does some subset of the weights sum to exactly 1/2 (within tol)?

    Meet-in-the-middle: enumerate subset sums of each half, sort one side,
    and binary-search complements.  Handles m <= 30.
    """
    a = instance.weights.weights
    m = a.size
    if m > SUBSET_SUM_LIMIT:
        raise SizeRefusalError(f"subset-sum oracle needs m <= {SUBSET_SUM_LIMIT}, got {m}")

    def sums(part: np.ndarray) -> np.ndarray:
        out = np.zeros(1)
        for w in part:
            out = np.concatenate([out, out + w])
        return out

    left = sums(a[: m // 2])
    right = np.sort(sums(a[m // 2 :]))
    targets = 0.5 - left
    idx = np.searchsorted(right, targets - tol, side="left")
    ok = idx < right.size
    return bool(np.any(np.abs(right[idx[ok]] - targets[ok]) <= tol))


def reduction_roundtrip(instance: PartitionInstance) -> bool:
    """True iff alpha of the diagonal joint attains 1/4.

    Verifies agreement with the independent subset-sum oracle and raises if
    the two ever disagree — they are two routes to the same question.
    """
    alpha = alpha_bruteforce(partition_to_joint(instance))
    attains = abs(alpha - 0.25) <= EQUALITY_TOL
    if attains != subset_sum_half(instance):
        raise MixkitError(
            f"oracle disagreement on {instance.weights.weights!r}: "
            f"alpha={alpha!r} vs subset-sum={not attains}"
        )
    return attains


def random_dyadic_instance(
    m: int, rng: np.random.Generator, denom_bits: int = 16
) -> PartitionInstance:
    """Random instance with weights k_i / 2^denom_bits, all positive.

    Dyadic weights are exact in binary floating point, so subset sums carry
    no rounding error and the 1e-12 equality tolerance can never flip an
    answer (the sum grid spacing is 2^-denom_bits).
    """
    if m < 1:
        raise InputError("instance needs at least one weight")
    total = 1 << denom_bits
    if m > total:
        raise InputError(f"cannot split 2^{denom_bits} units into {m} positive weights")
    counts = rng.multinomial(total - m, np.full(m, 1.0 / m)) + 1
    return PartitionInstance(ProbVector(counts / total))
