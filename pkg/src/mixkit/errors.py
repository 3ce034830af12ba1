"""Exception hierarchy shared across the package.

The CLI maps these onto process exit codes: input problems exit 1,
size refusals exit 2, solver non-convergence exits 3.
"""


class MixkitError(Exception):
    """Base class for all package-specific errors."""


class InputError(MixkitError, ValueError):
    """Invalid user input: malformed files, broken invariants, bad shapes."""


class SizeRefusalError(MixkitError):
    """A problem instance exceeds the limit of an exact (exponential) routine."""


class SolverConvergenceError(MixkitError):
    """The interior-point solver ran out of Newton steps.

    ``best_value`` holds the objective at the last strictly feasible iterate,
    which is still a certified upper bound on the quantity being minimized.
    """

    def __init__(self, message: str, best_value: float, feasible: bool = True):
        super().__init__(message)
        self.best_value = best_value
        self.feasible = feasible
