"""Exact dependence coefficients for finite-valued pairs.

Three coefficients quantify how far a joint distribution sits from the
product of its marginals:

* ``beta``: total variation between joint and product; closed form
  ``0.5 * sum |gamma_ij|``.
* ``phi``: worst-case shift of conditional probabilities, ``phi(X|Y) =
  max_j (1/nu_j) * sum_i max(gamma_ij, 0)``.  Asymmetric; ``phi_reverse``
  conditions the other way.
* ``alpha``: worst-case event-pair covariance
  ``max_{S,T} |P(S x T) - P(S) P(T)|``.  Equals a quarter of the
  (inf -> 1)-induced norm of the centered matrix; computing it is NP-hard in
  general, so the exact routine enumerates sign vectors on the cheaper axis
  and refuses instances past ``enum_limit`` (certified bounds live in
  :mod:`mixkit.bounds`).

``alpha_bruteforce`` evaluates the definition directly over all subset pairs
and is kept as an independent cross-check for the reduced enumeration.

Naming convention: ``phi(theta)`` conditions on the *column* variable, so for
a joint with X on rows and Y on columns it returns phi(X|Y).  (Statements of
the closed form sometimes write the symmetric-looking "phi(X,Y)" for the same
quantity; this package fixes the conditional reading everywhere.)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import signed_l1_enum
from .errors import SizeRefusalError
from .prob import JointDist, gamma_matrix, mutual_information

DEFAULT_ENUM_LIMIT = 24
_BRUTEFORCE_LIMIT = 24  # bound on n + m for the double subset enumeration

Interval = tuple[float, float]


@dataclass(frozen=True)
class MixingReport:
    """All coefficients of one pair, with exactness bookkeeping.

    ``alpha`` is a float when the enumeration ran, else a certified
    ``(lower, upper)`` interval.  ``bins`` is set by the estimator wrappers
    to record the per-axis bin count a report was computed at.
    """

    alpha: float | Interval
    alpha_is_exact: bool
    beta: float
    phi_x_given_y: float
    phi_y_given_x: float
    mutual_information: float
    bins: int | None = None

    @property
    def alpha_lower(self) -> float:
        return self.alpha if self.alpha_is_exact else self.alpha[0]

    @property
    def alpha_upper(self) -> float:
        return self.alpha if self.alpha_is_exact else self.alpha[1]

    def chain_holds(self, tol: float = 1e-9) -> bool:
        """Check 2*alpha <= beta <= min(phi, phi_rev) <= max <= 1, alpha <= 1/4."""
        lo = min(self.phi_x_given_y, self.phi_y_given_x)
        hi = max(self.phi_x_given_y, self.phi_y_given_x)
        return (
            self.alpha_lower >= -tol
            and self.alpha_upper <= 0.25 + tol
            and 2.0 * self.alpha_lower <= self.beta + tol
            and self.beta <= lo + tol
            and hi <= 1.0 + tol
        )

    def to_dict(self) -> dict:
        d = {
            "alpha": self.alpha if self.alpha_is_exact else list(self.alpha),
            "alpha_is_exact": self.alpha_is_exact,
            "beta": self.beta,
            "phi_x_given_y": self.phi_x_given_y,
            "phi_y_given_x": self.phi_y_given_x,
            "mutual_information": self.mutual_information,
        }
        if self.bins is not None:
            d["bins"] = self.bins
        return d

    @staticmethod
    def from_dict(d: dict) -> "MixingReport":
        alpha = d["alpha"]
        if isinstance(alpha, list):
            alpha = (alpha[0], alpha[1])
        return MixingReport(
            alpha=alpha,
            alpha_is_exact=d["alpha_is_exact"],
            beta=d["beta"],
            phi_x_given_y=d["phi_x_given_y"],
            phi_y_given_x=d["phi_y_given_x"],
            mutual_information=d["mutual_information"],
            bins=d.get("bins"),
        )


def beta(theta: JointDist) -> float:
    """Total variation between the joint and the product of its marginals."""
    return 0.5 * float(np.abs(gamma_matrix(theta).matrix).sum())


def phi(theta: JointDist) -> float:
    """phi of the row variable given the column variable.

    Columns with zero marginal mass are dropped first: conditioning on a null
    event is defined to change nothing, so such columns cannot attain the max.
    """
    t = theta.matrix
    nu = t.sum(axis=0)
    keep = nu > 0
    gam = gamma_matrix(theta).matrix[:, keep]
    pos = np.where(gam > 0, gam, 0.0).sum(axis=0)
    return float((pos / nu[keep]).max())


def phi_reverse(theta: JointDist) -> float:
    """phi of the column variable given the row variable."""
    return phi(theta.transpose())


def alpha_exact(theta: JointDist, enum_limit: int = DEFAULT_ENUM_LIMIT) -> float:
    """Exact alpha via sign-vector enumeration over the smaller axis.

    alpha is symmetric in the two variables, so the joint is transposed when
    that makes the enumerated axis shorter.  Cost is O(2^min(n,m) * max(n,m));
    instances with min(n, m) > ``enum_limit`` raise :class:`SizeRefusalError`.
    """
    gam = gamma_matrix(theta).matrix
    if gam.shape[1] > gam.shape[0]:
        gam = gam.T
    if gam.shape[1] > enum_limit:
        raise SizeRefusalError(
            f"exact alpha needs min(n, m) <= {enum_limit}, got {gam.shape[1]}; "
            "use alpha_bounds for certified bounds"
        )
    _, z = signed_l1_enum(np.ascontiguousarray(gam.T))
    # Re-evaluate at the winning signs; shared across backends so they agree.
    return 0.25 * float(np.abs(gam @ z).sum())


def alpha_bruteforce(theta: JointDist) -> float:
    """Exact alpha straight from the definition, over all subset pairs.

    Independent of the centered-matrix route: evaluates
    ``|P(S x T) - P(S) P(T)|`` for every S and T.  Needs n + m <= 24.
    """
    t = theta.matrix
    if t.shape[0] > t.shape[1]:
        t = t.T  # alpha is symmetric; enumerate the smaller side fully
    n, m = t.shape
    if n + m > _BRUTEFORCE_LIMIT:
        raise SizeRefusalError(
            f"brute-force alpha needs n + m <= {_BRUTEFORCE_LIMIT}, got {n + m}"
        )
    mu = t.sum(axis=1)
    nu = t.sum(axis=0)

    s_masks = (np.arange(2**n)[:, None] >> np.arange(n)) & 1
    s_masks = s_masks.astype(float)
    p_s = s_masks @ mu  # P(S) for every subset of rows
    t_s = s_masks @ t  # P({S} x {j}) row sums for every subset

    best = 0.0
    chunk = max(256, (1 << 22) // (1 << n))  # cap the block at ~32 MB
    for start in range(0, 2**m, chunk):
        stop = min(start + chunk, 2**m)
        t_masks = ((np.arange(start, stop)[:, None] >> np.arange(m)) & 1).astype(float)
        p_t = t_masks @ nu
        vals = np.abs(t_s @ t_masks.T - np.outer(p_s, p_t))
        best = max(best, float(vals.max()))
    return best


def mixing_report(
    theta: JointDist,
    enum_limit: int = DEFAULT_ENUM_LIMIT,
    *,
    tol: float = 1e-6,
    restarts: int = 16,
    seed: int = 0,
    bins: int | None = None,
) -> MixingReport:
    """Compute every coefficient of a pair in one pass.

    alpha is exact when the enumeration limit allows; otherwise the report
    carries the certified interval from :func:`mixkit.bounds.alpha_bounds`
    (``tol``, ``restarts`` and ``seed`` parameterize that fallback).
    """
    try:
        alpha: float | Interval = alpha_exact(theta, enum_limit)
        exact = True
    except SizeRefusalError:
        from .bounds import alpha_bounds  # deferred: bounds imports this module

        ab = alpha_bounds(theta, tol=tol, restarts=restarts, seed=seed)
        alpha = (ab.lower, ab.upper)
        exact = False
    return MixingReport(
        alpha=alpha,
        alpha_is_exact=exact,
        beta=beta(theta),
        phi_x_given_y=phi(theta),
        phi_y_given_x=phi_reverse(theta),
        mutual_information=mutual_information(theta),
        bins=bins,
    )
