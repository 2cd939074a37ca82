"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: validation and budget problems are
input errors (exit 2), numeric degeneracies are exit 3.
"""


class FractalDimError(Exception):
    """Base class for all errors raised by fractaldim."""


class ValidationError(FractalDimError):
    """Malformed or inconsistent input (bad shapes, non-contractions, ...)."""


class BudgetError(FractalDimError):
    """A requested construction would exceed the configured point budget."""


class NumericError(FractalDimError):
    """A numerically degenerate condition: no bracket, degenerate regression."""


class InternalError(FractalDimError):
    """An invariant that should be unreachable was violated."""
