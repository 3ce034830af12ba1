"""Independent brute-force oracles used across the test suite.

Everything here evaluates the *definitions* directly — maxima over explicit
subsets — with no shared code paths into the package's closed forms.  The
loops are vectorized over the inner subset axis for speed but the structure
stays definitional: probabilities of rectangles S x T, conditionals given T,
events of the product space for total variation.
"""

from __future__ import annotations

import numpy as np


def subset_masks(n: int) -> np.ndarray:
    """All subsets of range(n) as a (2^n, n) boolean matrix; bit i = element i."""
    return ((np.arange(2**n)[:, None] >> np.arange(n)) & 1).astype(bool)


def alpha_oracle(theta) -> float:
    """max over S, T of |P(S x T) - P(S) P(T)|."""
    theta = np.asarray(theta, dtype=float)
    n, m = theta.shape
    mu = theta.sum(axis=1)
    nu = theta.sum(axis=0)
    t_masks = subset_masks(m).astype(float)
    p_t = t_masks @ nu
    best = 0.0
    for s in subset_masks(n):
        row = theta[s].sum(axis=0)  # P(S x {j}) for each column j
        vals = np.abs(t_masks @ row - float(mu[s].sum()) * p_t)
        best = max(best, float(vals.max()))
    return best


def alpha_oracle_signed(theta) -> tuple[float, float]:
    """(max, min) of the signed expression P(S x T) - P(S) P(T) over S, T."""
    theta = np.asarray(theta, dtype=float)
    n, m = theta.shape
    mu = theta.sum(axis=1)
    nu = theta.sum(axis=0)
    t_masks = subset_masks(m).astype(float)
    p_t = t_masks @ nu
    hi, lo = -np.inf, np.inf
    for s in subset_masks(n):
        vals = t_masks @ theta[s].sum(axis=0) - float(mu[s].sum()) * p_t
        hi = max(hi, float(vals.max()))
        lo = min(lo, float(vals.min()))
    return hi, lo


def beta_oracle(theta) -> float:
    """Total variation between joint and product over *all* events.

    Events of the product space are arbitrary cell subsets (2^(n*m) of them),
    enumerated outright when feasible.  Beyond that, the maximizing event is
    the set of cells where the joint exceeds the product (adding any other
    cell or removing one of these can only shrink the difference), evaluated
    straight from the definition's per-event difference.
    """
    theta = np.asarray(theta, dtype=float)
    diff = (theta - np.outer(theta.sum(axis=1), theta.sum(axis=0))).ravel()
    if diff.size <= 16:
        masks = subset_masks(diff.size).astype(float)
        return float(np.abs(masks @ diff).max())
    return float(diff[diff > 0].sum())


def beta_event_gap(theta, events) -> float:
    """max |P_theta(E) - P_product(E)| over the given boolean cell events."""
    theta = np.asarray(theta, dtype=float)
    diff = (theta - np.outer(theta.sum(axis=1), theta.sum(axis=0))).ravel()
    return float(np.abs(np.asarray(events, dtype=float) @ diff).max())


def phi_oracle(theta) -> float:
    """max over S and T with P(T) > 0 of |P(S | T) - P(S)|."""
    theta = np.asarray(theta, dtype=float)
    n, m = theta.shape
    mu = theta.sum(axis=1)
    nu = theta.sum(axis=0)
    t_masks = subset_masks(m).astype(float)
    p_t = t_masks @ nu
    keep = p_t > 0  # null conditioning changes nothing by convention
    best = 0.0
    for s in subset_masks(n):
        rect = t_masks[keep] @ theta[s].sum(axis=0)
        vals = np.abs(rect / p_t[keep] - float(mu[s].sum()))
        best = max(best, float(vals.max()))
    return best


def phi_oracle_signed_max(theta) -> float:
    """max (no absolute value) of P(S | T) - P(S) over S and non-null T."""
    theta = np.asarray(theta, dtype=float)
    n, m = theta.shape
    mu = theta.sum(axis=1)
    nu = theta.sum(axis=0)
    t_masks = subset_masks(m).astype(float)
    p_t = t_masks @ nu
    keep = p_t > 0
    best = -np.inf
    for s in subset_masks(n):
        rect = t_masks[keep] @ theta[s].sum(axis=0)
        vals = rect / p_t[keep] - float(mu[s].sum())
        best = max(best, float(vals.max()))
    return best


def phi_g_table(theta):
    """g(S, T) = P(S | T) - P(S) for every S and non-null T.

    Returns (g matrix indexed [s_bits, t_bits], non-null T mask).
    """
    theta = np.asarray(theta, dtype=float)
    n, m = theta.shape
    mu = theta.sum(axis=1)
    nu = theta.sum(axis=0)
    t_masks = subset_masks(m).astype(float)
    p_t = t_masks @ nu
    keep = p_t > 0
    g = np.full((2**n, 2**m), np.nan)
    for sbits, s in enumerate(subset_masks(n)):
        rect = t_masks[keep] @ theta[s].sum(axis=0)
        g[sbits, keep] = rect / p_t[keep] - float(mu[s].sum())
    return g, keep


def subset_sum_oracle(weights, target, tol=1e-12) -> bool:
    """Plain full enumeration: does any subset sum to the target?"""
    weights = np.asarray(weights, dtype=float)
    sums = subset_masks(weights.size).astype(float) @ weights
    return bool(np.any(np.abs(sums - target) <= tol))


def random_joint(rng, n, m):
    t = rng.random((n, m))
    return t / t.sum()


def random_sparse_joint(rng, n, m, zero_frac=0.4):
    """Joint with a good chance of structural zeros (exercises edge cases)."""
    t = rng.random((n, m))
    t[rng.random((n, m)) < zero_frac] = 0.0
    if t.sum() == 0.0:
        t[rng.integers(n), rng.integers(m)] = 1.0
    return t / t.sum()
