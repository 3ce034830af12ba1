"""Finite-distribution primitives.

Probability vectors, joint distributions on product spaces, and the centered
matrix ``joint - outer(row_marginal, col_marginal)`` that every dependence
coefficient in this package is a function of.

Conventions
-----------
* Rows of a joint matrix index outcomes of the first variable (X), columns
  index the second (Y).
* All logarithms are natural; entropies and divergences are in nats.
* Construction rescales inputs whose total mass drifts from 1 by at most
  ``NORMALIZE_TOL`` (CSV round-trips lose digits) and rejects anything worse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError

NORMALIZE_TOL = 1e-9
ZERO_SUM_TOL = 1e-12


def _clean_nonneg(values, name: str) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise InputError(f"{name} contains non-finite entries")
    if np.any(arr < 0):
        raise InputError(f"{name} contains negative entries")
    return arr


def _normalized(arr: np.ndarray, name: str) -> np.ndarray:
    total = float(arr.sum())
    if abs(total - 1.0) > NORMALIZE_TOL:
        raise InputError(
            f"{name} sums to {total!r}, more than {NORMALIZE_TOL} away from 1"
        )
    arr = arr / total
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class ProbVector:
    """A probability distribution on a finite set, stored as a weight vector."""

    weights: np.ndarray

    def __post_init__(self):
        arr = _clean_nonneg(self.weights, "probability vector")
        if arr.ndim != 1 or arr.size == 0:
            raise InputError("probability vector must be 1-D and non-empty")
        object.__setattr__(self, "weights", _normalized(arr, "probability vector"))

    def __len__(self) -> int:
        return self.weights.size

    @staticmethod
    def uniform(n: int) -> "ProbVector":
        return ProbVector(np.full(n, 1.0 / n))


@dataclass(frozen=True)
class JointDist:
    """An n-by-m joint probability matrix for a pair of finite variables."""

    matrix: np.ndarray

    def __post_init__(self):
        arr = _clean_nonneg(self.matrix, "joint matrix")
        if arr.ndim != 2 or arr.size == 0:
            raise InputError("joint matrix must be 2-D and non-empty")
        object.__setattr__(self, "matrix", _normalized(arr, "joint matrix"))

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def m(self) -> int:
        return self.matrix.shape[1]

    def transpose(self) -> "JointDist":
        return JointDist(self.matrix.T)


@dataclass(frozen=True)
class GammaMatrix:
    """The centered matrix ``joint - outer(mu, nu)``.

    Every row and every column sums to zero (the joint and the product of its
    marginals share marginals), which is what the closed forms for the
    dependence coefficients rely on.
    """

    matrix: np.ndarray

    def __post_init__(self):
        arr = np.array(self.matrix, dtype=float)
        if arr.ndim != 2 or arr.size == 0:
            raise InputError("gamma matrix must be 2-D and non-empty")
        if not np.all(np.isfinite(arr)):
            raise InputError("gamma matrix contains non-finite entries")
        if np.any(np.abs(arr) > 1.0 + 1e-9):
            raise InputError("gamma matrix entries must lie in [-1, 1]")
        row = np.abs(arr.sum(axis=1)).max()
        col = np.abs(arr.sum(axis=0)).max()
        if row > ZERO_SUM_TOL or col > ZERO_SUM_TOL:
            raise InputError(
                f"gamma matrix rows/columns must sum to 0 "
                f"(max |row sum| {row:.3e}, max |col sum| {col:.3e})"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "matrix", arr)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def m(self) -> int:
        return self.matrix.shape[1]


def marginals(theta: JointDist) -> tuple[ProbVector, ProbVector]:
    """Row and column marginals of a joint distribution."""
    return (
        ProbVector(theta.matrix.sum(axis=1)),
        ProbVector(theta.matrix.sum(axis=0)),
    )


def product(mu: ProbVector, nu: ProbVector) -> JointDist:
    """Product distribution: entry (i, j) equals ``mu_i * nu_j``."""
    return JointDist(np.outer(mu.weights, nu.weights))


def total_variation(mu: ProbVector, nu: ProbVector) -> float:
    """Total variation distance ``0.5 * sum |mu_i - nu_i|``; lies in [0, 1]."""
    if len(mu) != len(nu):
        raise InputError(
            f"total_variation needs equal lengths, got {len(mu)} and {len(nu)}"
        )
    return 0.5 * float(np.abs(mu.weights - nu.weights).sum())


def entropy(p: ProbVector) -> float:
    """Shannon entropy in nats, with the 0*log(0) = 0 convention."""
    return _entropy_of(p.weights)


def _entropy_of(weights: np.ndarray) -> float:
    w = weights[weights > 0]
    return float(-(w * np.log(w)).sum())


def kl_divergence(p, q) -> float:
    """Kullback-Leibler divergence in nats.

    Accepts two ProbVectors or two JointDists of equal shape.  Where q is zero
    but p is not, the divergence is infinite; ``math.inf`` is returned as the
    distinguished signal rather than raising.
    """
    pa = p.weights if isinstance(p, ProbVector) else p.matrix
    qa = q.weights if isinstance(q, ProbVector) else q.matrix
    if pa.shape != qa.shape:
        raise InputError(f"kl_divergence needs equal shapes, got {pa.shape} and {qa.shape}")
    mask = pa > 0
    if np.any(qa[mask] == 0):
        return math.inf
    pm = pa[mask]
    return float((pm * np.log(pm / qa[mask])).sum())


def mutual_information(theta: JointDist) -> float:
    """Mutual information in nats, ``H(mu) + H(nu) - H(theta)``.

    Equals the KL divergence between the joint and the product of its
    marginals; zero exactly when the variables are independent.
    """
    mu, nu = marginals(theta)
    return entropy(mu) + entropy(nu) - _entropy_of(theta.matrix.ravel())


def gamma_matrix(theta: JointDist) -> GammaMatrix:
    """Centered matrix of a joint distribution: ``theta - outer(mu, nu)``."""
    t = theta.matrix
    return GammaMatrix(t - np.outer(t.sum(axis=1), t.sum(axis=0)))
