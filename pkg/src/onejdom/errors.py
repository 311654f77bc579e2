"""Exception types shared across the toolkit.

The CLI maps these onto its exit-code table, so solvers should raise the
most specific class that applies rather than bare ValueError.
"""


class ParseError(ValueError):
    """Malformed input text (edge lists, label files, EX3C files, ...)."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PreconditionError(ValueError):
    """An operation was called outside its stated preconditions."""


class SizeGuardError(PreconditionError):
    """Instance exceeds an exact solver's size guard and no override was given."""


class InfeasibleProbabilityError(PreconditionError):
    """The LLL selection probability is >= 1; the randomized constructor
    does not apply and an exact method should be used instead."""


class PremiseInfeasibleError(PreconditionError):
    """No alpha satisfies the analytic premise for the given (j, degrees)."""

    def __init__(self, message: str, threshold: float):
        super().__init__(message)
        self.threshold = threshold


class ResampleLimitError(RuntimeError):
    """The resampling constructor hit its cap before satisfying all clauses.

    Carries the failed run record and a census of the remaining violations
    so the outcome is never reported silently.
    """

    def __init__(self, message: str, run=None, census=None):
        super().__init__(message)
        self.run = run
        self.census = dict(census or {})


class InternalContradictionError(RuntimeError):
    """A defensive re-check failed: the implementation contradicted itself."""
