"""Certified lower and upper bounds for alpha.

Exact alpha is NP-hard, so past the enumeration limit we sandwich it:

* lower: the best of a greedy sign-flip local search (any sign vector z
  certifies ``0.25 * ||G z||_1 <= alpha``) and ``0.1086 * c(G)``;
* upper: the least of ``0.25 * c(G)``, half of beta, the Pinsker cap
  ``0.5 * sqrt(I/2)`` and the universal 1/4.

``c(G)`` is the value of the semidefinite program

    c(G) = 0.5 * min  sum(x) + sum(y)
           s.t.  [[Diag(x), G], [G^T, Diag(y)]]  is positive semidefinite,

which satisfies ``norm_{inf,1}(G) <= c(G) <= 2.3 * norm_{inf,1}(G)`` and
hence ``0.1086 * c <= alpha <= 0.25 * c``.  The program is solved here with a
small log-barrier interior-point method: for a linear objective c'u with
barrier -log det M(u), the gradient and Hessian are available in closed form
from W = M(u)^{-1} alone (grad_i = c_i - eta * W_ii, Hess = eta * W o W), so
each Newton step costs one factorization of the (n+m)-sized block matrix.
No external solver is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import MixkitError, SolverConvergenceError
from .mixing import beta
from .prob import GammaMatrix, JointDist, gamma_matrix, mutual_information

SDP_CONSTANT_LOWER = 0.1086  # stated constant; 0.25 / 2.3 = 0.10869... rounds to it
SDP_CONSTANT_UPPER = 0.25


@dataclass(frozen=True)
class AlphaBounds:
    """A certified enclosure ``lower <= alpha <= upper`` with provenance.

    ``sources`` names which ingredient produced each side, e.g.
    ``{"lower": "local_search", "upper": "half_beta"}``.  The local search is
    this package's own heuristic (any sign vector is a valid certificate);
    the remaining ingredients are the SDP constant and the analytic caps.
    ``c_gamma`` is NaN when the SDP solver failed and the caps took over.
    """

    lower: float
    upper: float
    c_gamma: float
    local_search_value: float
    pinsker_cap: float
    sources: dict

    def __post_init__(self):
        if not (-1e-12 <= self.lower and self.upper <= 0.25 + 1e-9):
            raise MixkitError(
                f"alpha bounds out of range: [{self.lower}, {self.upper}]"
            )
        if self.lower > self.upper + 2e-6:
            raise MixkitError(
                f"alpha lower bound {self.lower} exceeds upper bound {self.upper}"
            )

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "c_gamma": None if math.isnan(self.c_gamma) else self.c_gamma,
            "local_search_value": self.local_search_value,
            "pinsker_cap": self.pinsker_cap,
            "sources": dict(self.sources),
        }

    @staticmethod
    def from_dict(d: dict) -> "AlphaBounds":
        c = d["c_gamma"]
        return AlphaBounds(
            lower=d["lower"],
            upper=d["upper"],
            c_gamma=math.nan if c is None else c,
            local_search_value=d["local_search_value"],
            pinsker_cap=d["pinsker_cap"],
            sources=dict(d["sources"]),
        )


def alpha_lower_localsearch(
    gamma: GammaMatrix,
    restarts: int = 16,
    seed: int = 0,
    max_flips_per_restart: int | None = None,
) -> float:
    """Greedy local search for a sign vector maximizing ``||G z||_1``.

    From each random start, flips the single coordinate that most increases
    the norm until no flip strictly improves; the best value over ``restarts``
    starts is returned as ``0.25 * ||G z*||_1``.  Deterministic given the
    seed (restart k draws from a generator seeded with ``seed XOR k``).
    Every iterate is a feasible certificate, so the result is always a valid
    lower bound on alpha.  Strict improvement guarantees termination; the
    flip cap only exists to turn a broken invariant into a loud failure.
    """
    if restarts < 1:
        raise MixkitError("local search needs at least one restart")
    g = gamma.matrix
    if g.shape[1] > g.shape[0]:
        g = g.T  # the induced norm is transpose-invariant; search the short axis
    n, m = g.shape
    if max_flips_per_restart is None:
        max_flips_per_restart = 1000 * m

    best_norm = 0.0
    for k in range(restarts):
        rng = np.random.default_rng(seed ^ k)
        z = rng.choice([-1.0, 1.0], size=m)
        v = g @ z
        cur = float(np.abs(v).sum())
        for _ in range(max_flips_per_restart):
            # candidate j: flipping z_j turns v into v - 2 z_j g[:, j]
            cand = np.abs(v[:, None] - 2.0 * g * z[None, :]).sum(axis=0)
            j = int(np.argmax(cand))
            if not cand[j] > cur:
                break
            v = v - 2.0 * z[j] * g[:, j]
            z[j] = -z[j]
            cur = float(cand[j])
        else:
            raise MixkitError(
                "local search exceeded its flip cap; strict-improvement invariant broken"
            )
        norm = float(np.abs(g @ z).sum())
        best_norm = max(best_norm, norm)
    return 0.25 * best_norm


def _block_matrix(a: np.ndarray, u: np.ndarray) -> np.ndarray:
    n, m = a.shape
    mat = np.zeros((n + m, n + m))
    mat[:n, :n] = np.diag(u[:n])
    mat[n:, n:] = np.diag(u[n:])
    mat[:n, n:] = a
    mat[n:, :n] = a.T
    return mat


def _is_pd(mat: np.ndarray) -> bool:
    try:
        np.linalg.cholesky(mat)
        return True
    except np.linalg.LinAlgError:
        return False


def nesterov_c(
    gamma: GammaMatrix, tol: float = 1e-6, max_newton: int = 200
) -> float:
    """Value of the semidefinite relaxation ``c(G)`` to relative accuracy tol.

    Log-barrier interior-point method on the block matrix; the start
    ``x_i = sum_j |g_ij| + eps`` (and symmetrically for y) is diagonally
    dominant, hence strictly feasible.  The barrier parameter decreases
    geometrically (x0.25) until the duality-gap proxy ``eta * (n + m)`` drops
    below the requested relative tolerance.  The returned value comes from a
    feasible point, so it is always a certified upper bound on the true
    optimum (and therefore on the induced norm).
    """
    if tol <= 0:
        raise MixkitError("solver tolerance must be positive")
    scale = float(np.abs(gamma.matrix).max())
    if scale == 0.0:
        return 0.0
    a = gamma.matrix / scale  # c() is positively homogeneous; solve normalized
    n, m = a.shape
    size = n + m

    u = np.concatenate([np.abs(a).sum(axis=1), np.abs(a).sum(axis=0)]) + 1e-2
    eta = float(u.sum()) / size
    steps = 0
    while True:
        while True:  # center at the current eta
            mat = _block_matrix(a, u)
            w = np.linalg.inv(mat)
            grad = 1.0 - eta * np.diag(w)
            hess = eta * (w * w)
            try:
                step = np.linalg.solve(hess, -grad)
            except np.linalg.LinAlgError:
                step = np.linalg.lstsq(hess, -grad, rcond=None)[0]
            decrement = float(-grad @ step)
            if decrement / 2.0 <= 1e-10:
                break
            if steps >= max_newton:
                raise SolverConvergenceError(
                    f"no convergence within {max_newton} Newton steps",
                    best_value=0.5 * float(u.sum()) * scale,
                )
            f0 = float(u.sum()) - eta * np.linalg.slogdet(mat)[1]
            slope = float(grad @ step)
            t = 1.0
            while t >= 1e-14:
                trial = u + t * step
                trial_mat = _block_matrix(a, trial)
                if _is_pd(trial_mat):
                    ft = float(trial.sum()) - eta * np.linalg.slogdet(trial_mat)[1]
                    if ft <= f0 + 0.25 * t * slope:
                        break
                t *= 0.5
            else:
                break  # step direction numerically exhausted; accept center
            u = u + t * step
            steps += 1
        if eta * size <= 0.25 * tol * float(u.sum()):
            return 0.5 * float(u.sum()) * scale
        eta *= 0.25


def alpha_bounds(
    theta: JointDist,
    *,
    tol: float = 1e-6,
    restarts: int = 16,
    seed: int = 0,
) -> AlphaBounds:
    """Certified alpha enclosure combining local search, the SDP, and caps.

    lower = max(local_search, 0.1086 * c); upper = min(0.25 * c, beta / 2,
    0.5 * sqrt(I / 2), 0.25).  If the SDP solver fails to converge the bounds
    degrade gracefully to the non-SDP ingredients.
    """
    gam = gamma_matrix(theta)
    local = alpha_lower_localsearch(gam, restarts=restarts, seed=seed)
    b = beta(theta)
    info = mutual_information(theta)
    pinsker = 0.5 * math.sqrt(0.5 * max(info, 0.0))

    sources: dict = {}
    try:
        c = nesterov_c(gam, tol=tol)
        sdp_note = "converged"
    except SolverConvergenceError as err:
        c = math.nan
        sdp_note = f"failed: {err}"

    if math.isnan(c):
        lower = local
        sources["lower"] = "local_search"
        upper_candidates = {"half_beta": 0.5 * b, "pinsker": pinsker, "range": 0.25}
    else:
        sdp_lower = SDP_CONSTANT_LOWER * c
        lower = max(local, sdp_lower)
        sources["lower"] = "local_search" if local >= sdp_lower else "sdp"
        upper_candidates = {
            "sdp": SDP_CONSTANT_UPPER * c,
            "half_beta": 0.5 * b,
            "pinsker": pinsker,
            "range": 0.25,
        }
    upper_name = min(upper_candidates, key=upper_candidates.get)
    sources["upper"] = upper_name
    sources["sdp"] = sdp_note

    return AlphaBounds(
        lower=lower,
        upper=upper_candidates[upper_name],
        c_gamma=c,
        local_search_value=local,
        pinsker_cap=pinsker,
        sources=sources,
    )
