"""Conditionally independent triples and data-processing-type checks.

For a chain X -> Y -> Z (X and Z conditionally independent given Y), every
dependence family is monotone under the extra processing step:

    I(X,Z)      <= min(I(X,Y),      I(Y,Z))
    alpha(X,Z)  <= min(alpha(X,Y),  alpha(Y,Z))
    beta(X,Z)   <= min(beta(X,Y),   beta(Y,Z))
    phi(X|Z)    <= min(phi(X|Y),    phi(Y|Z))
    phi(Z|X)    <= min(phi(Z|Y),    phi(Y|X))

This module builds such triples from a joint and a channel, verifies
conditional independence on arbitrary tensors, and evaluates all five
inequalities with slacks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .mixing import DEFAULT_ENUM_LIMIT, MixingReport, mixing_report
from .prob import JointDist, _clean_nonneg, _normalized

PAIR_AXES = {"XY": 2, "YZ": 0, "XZ": 1}

# (lhs pair, lhs attribute) vs (rhs pair/attribute) per inequality family.
_INEQUALITIES = {
    "mutual_information": (
        ("XZ", "mutual_information"),
        [("XY", "mutual_information"), ("YZ", "mutual_information")],
    ),
    "beta": (("XZ", "beta"), [("XY", "beta"), ("YZ", "beta")]),
    "phi_forward": (
        ("XZ", "phi_x_given_y"),  # phi(X|Z)
        [("XY", "phi_x_given_y"), ("YZ", "phi_x_given_y")],  # phi(X|Y), phi(Y|Z)
    ),
    "phi_reverse": (
        ("XZ", "phi_y_given_x"),  # phi(Z|X)
        [("YZ", "phi_y_given_x"), ("XY", "phi_y_given_x")],  # phi(Z|Y), phi(Y|X)
    ),
}


@dataclass(frozen=True)
class Channel:
    """Row-stochastic matrix: row j is the distribution of Z given Y = j."""

    matrix: np.ndarray

    def __post_init__(self):
        arr = _clean_nonneg(self.matrix, "channel matrix")
        if arr.ndim != 2 or arr.size == 0:
            raise InputError("channel matrix must be 2-D and non-empty")
        sums = arr.sum(axis=1)
        if np.any(np.abs(sums - 1.0) > 1e-9):
            worst = int(np.argmax(np.abs(sums - 1.0)))
            raise InputError(
                f"channel row {worst} sums to {sums[worst]!r}, not 1"
            )
        arr = arr / sums[:, None]
        arr.setflags(write=False)
        object.__setattr__(self, "matrix", arr)

    @staticmethod
    def identity(m: int) -> "Channel":
        return Channel(np.eye(m))

    @staticmethod
    def constant(m: int, rho) -> "Channel":
        rho = np.asarray(rho, dtype=float)
        return Channel(np.tile(rho, (m, 1)))


@dataclass(frozen=True)
class TripleDist:
    """Joint distribution of (X, Y, Z) as an n-by-m-by-l tensor."""

    tensor: np.ndarray

    def __post_init__(self):
        arr = _clean_nonneg(self.tensor, "triple tensor")
        if arr.ndim != 3 or arr.size == 0:
            raise InputError("triple tensor must be 3-D and non-empty")
        object.__setattr__(self, "tensor", _normalized(arr, "triple tensor"))

    @property
    def n(self) -> int:
        return self.tensor.shape[0]

    @property
    def m(self) -> int:
        return self.tensor.shape[1]

    @property
    def l(self) -> int:
        return self.tensor.shape[2]


@dataclass(frozen=True)
class InequalityCheck:
    """One data-processing inequality: lhs <= rhs_min, with slack.

    ``state`` is "pass" or "fail" when all quantities involved are exact.
    When alpha had to be bounded instead of enumerated, the check uses the
    enclosures conservatively and may be "inconclusive".
    """

    lhs: float
    rhs_min: float
    slack: float
    state: str
    exact: bool

    def to_dict(self) -> dict:
        return {
            "lhs": self.lhs,
            "rhs_min": self.rhs_min,
            "slack": self.slack,
            "state": self.state,
            "exact": self.exact,
        }


@dataclass(frozen=True)
class DpiReport:
    """Coefficients of all three pairs plus the five inequality verdicts."""

    pairs: dict  # {"XY" | "YZ" | "XZ": MixingReport}
    checks: dict  # {family: InequalityCheck}
    conditionally_independent: bool

    def all_pass(self) -> bool:
        return all(c.state == "pass" for c in self.checks.values())

    def to_dict(self) -> dict:
        return {
            "pairs": {k: r.to_dict() for k, r in self.pairs.items()},
            "checks": {k: c.to_dict() for k, c in self.checks.items()},
            "conditionally_independent": self.conditionally_independent,
        }


def compose_triple(theta_xy: JointDist, channel: Channel) -> TripleDist:
    """Build the triple ``delta_ijk = theta_ij * c_jk``.

    The result is conditionally independent given Y by construction, and its
    XY marginal reproduces the input joint.
    """
    if channel.matrix.shape[0] != theta_xy.m:
        raise InputError(
            f"channel has {channel.matrix.shape[0]} rows, "
            f"joint has {theta_xy.m} columns"
        )
    return TripleDist(np.einsum("ij,jk->ijk", theta_xy.matrix, channel.matrix))


def marginal_pair(delta: TripleDist, which: str) -> JointDist:
    """Pairwise marginal of a triple: one of "XY", "YZ", "XZ"."""
    if which not in PAIR_AXES:
        raise InputError(f"unknown pair {which!r}; expected one of {sorted(PAIR_AXES)}")
    return JointDist(delta.tensor.sum(axis=PAIR_AXES[which]))


def is_conditionally_independent(delta: TripleDist, tol: float = 1e-9) -> bool:
    """Check ``delta_ijk * nu_j == theta_ij * eta_jk`` for every slice with nu_j > 0.

    Slices with zero Y-mass are skipped (conditioning on a null event).
    """
    d = delta.tensor
    theta = d.sum(axis=2)
    eta = d.sum(axis=0)
    nu = theta.sum(axis=0)
    keep = nu > 0
    lhs = d[:, keep, :] * nu[keep][None, :, None]
    rhs = theta[:, keep, None] * eta[None, keep, :]
    return bool(np.abs(lhs - rhs).max() <= tol) if lhs.size else True


def dpi_check(
    delta: TripleDist,
    enum_limit: int = DEFAULT_ENUM_LIMIT,
    *,
    tol: float = 1e-9,
    solver_tol: float = 1e-6,
    restarts: int = 16,
    seed: int = 0,
) -> DpiReport:
    """Evaluate all five data-processing inequalities on a triple.

    Exact alpha is used whenever the pair dimensions are within
    ``enum_limit``; otherwise alpha enters through its certified enclosure
    and the alpha verdict may be "inconclusive".
    """
    pairs = {
        which: mixing_report(
            marginal_pair(delta, which),
            enum_limit,
            tol=solver_tol,
            restarts=restarts,
            seed=seed,
        )
        for which in ("XY", "YZ", "XZ")
    }

    checks: dict = {}
    for name, ((lp, lattr), rhs_spec) in _INEQUALITIES.items():
        lhs = getattr(pairs[lp], lattr)
        rhs = min(getattr(pairs[rp], rattr) for rp, rattr in rhs_spec)
        slack = rhs - lhs
        checks[name] = InequalityCheck(
            lhs=lhs,
            rhs_min=rhs,
            slack=slack,
            state="pass" if slack >= -tol else "fail",
            exact=True,
        )

    exact = all(pairs[p].alpha_is_exact for p in pairs)
    lhs_lo, lhs_hi = pairs["XZ"].alpha_lower, pairs["XZ"].alpha_upper
    rhs_lo = min(pairs["XY"].alpha_lower, pairs["YZ"].alpha_lower)
    rhs_hi = min(pairs["XY"].alpha_upper, pairs["YZ"].alpha_upper)
    if exact:
        slack = rhs_lo - lhs_hi
        state = "pass" if slack >= -tol else "fail"
    elif lhs_hi <= rhs_lo + tol:
        slack, state = rhs_lo - lhs_hi, "pass"
    elif lhs_lo > rhs_hi + tol:
        slack, state = rhs_hi - lhs_lo, "fail"
    else:
        slack, state = rhs_lo - lhs_hi, "inconclusive"
    checks["alpha"] = InequalityCheck(
        lhs=lhs_hi, rhs_min=rhs_lo, slack=slack, state=state, exact=exact
    )

    return DpiReport(
        pairs=pairs,
        checks=checks,
        conditionally_independent=is_conditionally_independent(delta, tol),
    )
