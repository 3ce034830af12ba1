"""mixkit: dependence coefficients for finite and real-valued variable pairs.

Exact computation of the total-variation (beta) and conditional (phi)
coefficients, exact enumeration and certified bounds for the event-pair
(alpha) coefficient, data-processing-type inequality checks on Markov
triples, and consistent estimation of all three from i.i.d. samples via
percentile binning.
"""

from ._backend import BACKEND
from .bounds import AlphaBounds, alpha_bounds, alpha_lower_localsearch, nesterov_c
from .dpi import (
    Channel,
    DpiReport,
    TripleDist,
    compose_triple,
    dpi_check,
    is_conditionally_independent,
    marginal_pair,
)
from .errors import InputError, MixkitError, SizeRefusalError, SolverConvergenceError
from .estimator import (
    BinningSpec,
    EstimateTrace,
    SampleSet,
    binned_joint,
    convergence_experiment,
    estimate_mixing,
    make_samples,
    naive_estimate_beta,
    percentile_bins,
)
from .mixing import (
    MixingReport,
    alpha_bruteforce,
    alpha_exact,
    beta,
    mixing_report,
    phi,
    phi_reverse,
)
from .prob import (
    GammaMatrix,
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
from .reductions import (
    PartitionInstance,
    partition_to_joint,
    random_dyadic_instance,
    reduction_roundtrip,
    subset_sum_half,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "AlphaBounds",
    "BinningSpec",
    "Channel",
    "DpiReport",
    "EstimateTrace",
    "GammaMatrix",
    "InputError",
    "JointDist",
    "MixingReport",
    "MixkitError",
    "PartitionInstance",
    "ProbVector",
    "SampleSet",
    "SizeRefusalError",
    "SolverConvergenceError",
    "TripleDist",
    "alpha_bounds",
    "alpha_bruteforce",
    "alpha_exact",
    "alpha_lower_localsearch",
    "beta",
    "binned_joint",
    "compose_triple",
    "convergence_experiment",
    "dpi_check",
    "entropy",
    "estimate_mixing",
    "gamma_matrix",
    "is_conditionally_independent",
    "kl_divergence",
    "make_samples",
    "marginal_pair",
    "marginals",
    "mixing_report",
    "mutual_information",
    "naive_estimate_beta",
    "nesterov_c",
    "partition_to_joint",
    "percentile_bins",
    "phi",
    "phi_reverse",
    "product",
    "random_dyadic_instance",
    "reduction_roundtrip",
    "subset_sum_half",
    "total_variation",
]
