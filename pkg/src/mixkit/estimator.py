"""Estimation of mixing coefficients from real-valued i.i.d. sample pairs.

The consistent scheme bins each axis by order statistics into k nearly
equal-count bins (k growing with the sample count l but with k/l -> 0),
forms the binned joint distribution, and evaluates the finite-alphabet
coefficients on it.

The naive scheme — one bin per sample, i.e. the raw empirical joint — is
provably useless for this purpose: with distinct coordinates its beta
estimate is (l-1)/l no matter what the data says, so it drifts to 1 as l
grows even for independent samples.  ``naive_estimate_beta`` implements it
anyway, as the reference demonstration.

A caveat worth knowing: consistency needs the joint law to have a density
with respect to the product of its marginals.  Data concentrated on a curve
(e.g. y = x exactly) has no such density; its binned beta estimate is
(k-1)/k at every bin count and therefore tends to 1, which is the correct
behavior of the estimator on a singular input, not a bug.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InputError
from .mixing import DEFAULT_ENUM_LIMIT, Interval, MixingReport, mixing_report
from .prob import JointDist


@dataclass(frozen=True)
class SampleSet:
    """Paired real-valued samples (x_1, y_1), ..., (x_l, y_l)."""

    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        x = np.array(self.x, dtype=float)
        y = np.array(self.y, dtype=float)
        if x.ndim != 1 or y.ndim != 1 or x.size != y.size:
            raise InputError("samples need two equal-length 1-D coordinate arrays")
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
            raise InputError("samples contain non-finite values")
        x.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __len__(self) -> int:
        return self.x.size

    @staticmethod
    def from_pairs(pairs) -> "SampleSet":
        arr = np.asarray(pairs, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise InputError("pairs must be an l-by-2 array")
        return SampleSet(arr[:, 0], arr[:, 1])

    def prefix(self, l: int) -> "SampleSet":
        return SampleSet(self.x[:l], self.y[:l])


def _ceil_cuberoot(l: int) -> int:
    k = int(round(l ** (1.0 / 3.0)))
    while k**3 < l:
        k += 1
    while k > 1 and (k - 1) ** 3 >= l:
        k -= 1
    return k


def _ceil_sqrt(l: int) -> int:
    k = math.isqrt(l)
    return k if k * k == l else k + 1


SCHEDULES = {"cuberoot": _ceil_cuberoot, "sqrt": _ceil_sqrt}


@dataclass(frozen=True)
class BinningSpec:
    """Either a fixed per-axis bin count k, or a named schedule l -> k_l.

    Built-in schedules ("cuberoot", "sqrt") both satisfy k_l -> infinity and
    k_l / l -> 0, which is what consistency requires.
    """

    k: int | None = None
    schedule: str | None = "cuberoot"

    def __post_init__(self):
        if self.k is not None:
            if self.k < 1:
                raise InputError("bin count must be positive")
        elif self.schedule not in SCHEDULES:
            raise InputError(
                f"unknown schedule {self.schedule!r}; expected one of {sorted(SCHEDULES)}"
            )

    def resolve(self, l: int) -> int:
        k = self.k if self.k is not None else SCHEDULES[self.schedule](l)
        if k > l:
            raise InputError(f"bin count {k} exceeds sample count {l}")
        return k


@dataclass(frozen=True)
class TraceRow:
    l: int
    k: int
    alpha: float | Interval
    alpha_is_exact: bool
    beta: float
    phi_x_given_y: float
    phi_y_given_x: float
    naive_beta: float | None = None

    def to_dict(self) -> dict:
        return {
            "l": self.l,
            "k": self.k,
            "alpha": self.alpha if self.alpha_is_exact else list(self.alpha),
            "alpha_is_exact": self.alpha_is_exact,
            "beta": self.beta,
            "phi_x_given_y": self.phi_x_given_y,
            "phi_y_given_x": self.phi_y_given_x,
            "naive_beta": self.naive_beta,
        }


@dataclass(frozen=True)
class EstimateTrace:
    """Per-sample-count rows of estimated coefficients."""

    rows: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"rows": [r.to_dict() for r in self.rows]}


def percentile_bins(values, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Assign each value to one of k equal-count bins by sorted order.

    With m = floor(l / k) and r = l - k * m, the first r bins hold m + 1
    values and the remaining k - r bins hold m.  Ties are broken by original
    position (stable sort), which makes the assignment deterministic.

    Returns (per-sample bin index, interior cut ranks), the latter being the
    cumulative bin sizes at which the bin index increments.
    """
    values = np.asarray(values, dtype=float)
    l = values.size
    if not 1 <= k <= l:
        raise InputError(f"bin count must satisfy 1 <= k <= {l}, got {k}")
    m, r = divmod(l, k)
    sizes = np.full(k, m)
    sizes[:r] += 1
    order = np.argsort(values, kind="stable")
    assignment = np.empty(l, dtype=np.int64)
    assignment[order] = np.repeat(np.arange(k), sizes)
    return assignment, np.cumsum(sizes)[:-1]


def _binned_counts(samples: SampleSet, k: int) -> np.ndarray:
    bx, _ = percentile_bins(samples.x, k)
    by, _ = percentile_bins(samples.y, k)
    return np.bincount(bx * k + by, minlength=k * k).reshape(k, k)


def binned_joint(samples: SampleSet, k: int) -> JointDist:
    """k-by-k joint distribution of the percentile-binned sample pair."""
    return JointDist(_binned_counts(samples, k) / len(samples))


def estimate_mixing(
    samples: SampleSet,
    spec: BinningSpec = BinningSpec(),
    enum_limit: int = DEFAULT_ENUM_LIMIT,
    *,
    tol: float = 1e-6,
    restarts: int = 16,
    seed: int = 0,
) -> MixingReport:
    """Estimate all coefficients of a sample pair at the spec's bin count."""
    if len(samples) < 2:
        raise InputError("estimation needs at least 2 samples")
    k = spec.resolve(len(samples))
    return mixing_report(
        binned_joint(samples, k),
        enum_limit,
        tol=tol,
        restarts=restarts,
        seed=seed,
        bins=k,
    )


def naive_estimate_beta(samples: SampleSet) -> float:
    """beta of the raw empirical joint: one bin per sample.

    Requires all x distinct and all y distinct.  The binned counts then form
    a permutation matrix, and beta is evaluated in integer arithmetic
    (gamma numerators are ``count * l - rowsum * colsum``), so the result is
    the correctly rounded value of (l-1)/l — exactly, not approximately.
    """
    l = len(samples)
    if l < 2:
        raise InputError("estimation needs at least 2 samples")
    if np.unique(samples.x).size != l or np.unique(samples.y).size != l:
        raise InputError(
            "naive estimator hypothesis violated: needs x_i != x_j and "
            "y_i != y_j for all i != j"
        )
    bx, _ = percentile_bins(samples.x, l)
    by, _ = percentile_bins(samples.y, l)
    rows = np.bincount(bx, minlength=l)
    cols = np.bincount(by, minlength=l)
    # Only occupied cells can contribute: an empty cell's numerator is
    # -rowsum*colsum < 0.  With one sample per bin every occupied cell has
    # count 1, so the dense l-by-l matrix is never materialized.
    num = l - rows[bx] * cols[by]
    positive = int(num[num > 0].sum())
    return positive / (l * l)


GENERATORS = ("independent", "comonotone", "block(b)")


def make_samples(generator: str, l: int, rng: np.random.Generator) -> SampleSet:
    """Draw l pairs from a named synthetic source.

    ``independent``: uniform product on the unit square.  ``comonotone``:
    y = x with x uniform (a singular joint).  ``block(b)``: b equal diagonal
    blocks, density b on each block — its true beta and phi both equal
    (b - 1) / b.
    """
    if generator == "independent":
        return SampleSet(rng.random(l), rng.random(l))
    if generator == "comonotone":
        x = rng.random(l)
        return SampleSet(x, x.copy())
    if generator.startswith("block(") and generator.endswith(")"):
        try:
            b = int(generator[6:-1])
        except ValueError:
            raise InputError(f"bad block generator {generator!r}") from None
        if b < 1:
            raise InputError("block count must be positive")
        u = rng.integers(0, b, size=l)
        return SampleSet(
            (u + rng.random(l)) / b,
            (u + rng.random(l)) / b,
        )
    raise InputError(f"unknown generator {generator!r}; expected one of {GENERATORS}")


def convergence_experiment(
    generator: str,
    lengths,
    spec: BinningSpec = BinningSpec(),
    seed: int = 0,
    enum_limit: int = DEFAULT_ENUM_LIMIT,
    *,
    tol: float = 1e-6,
    restarts: int = 16,
) -> EstimateTrace:
    """Estimate coefficients at each sample count of an increasing schedule.

    Row i draws its own samples from a generator seeded with ``seed XOR i``,
    so rows are independent of execution order.  Each row also carries the
    naive beta estimate, which climbs toward 1 regardless of the source —
    the whole point of the comparison.
    """
    lengths = [int(v) for v in lengths]
    if any(b <= a for a, b in zip(lengths, lengths[1:])):
        raise InputError("lengths must be strictly increasing")
    rows = []
    for i, l in enumerate(lengths):
        rng = np.random.default_rng(seed ^ i)
        samples = make_samples(generator, l, rng)
        report = estimate_mixing(
            samples, spec, enum_limit, tol=tol, restarts=restarts, seed=seed
        )
        try:
            naive = naive_estimate_beta(samples)
        except InputError:
            naive = None  # ties in the draw; the hypothesis needs distinct values
        rows.append(
            TraceRow(
                l=l,
                k=report.bins,
                alpha=report.alpha,
                alpha_is_exact=report.alpha_is_exact,
                beta=report.beta,
                phi_x_given_y=report.phi_x_given_y,
                phi_y_given_x=report.phi_y_given_x,
                naive_beta=naive,
            )
        )
    return EstimateTrace(rows=rows)
