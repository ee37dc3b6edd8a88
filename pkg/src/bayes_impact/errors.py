"""Exception types raised across the package."""


class BayesImpactError(Exception):
    """Base class for all package errors."""


class DomainError(BayesImpactError, ValueError):
    """An argument lies outside the domain of a function."""


class InputError(BayesImpactError, ValueError):
    """Malformed or inconsistent user input (files, samples, queries)."""


class DegenerateFitError(BayesImpactError):
    """The maximum likelihood estimate sits on the parameter boundary."""


class UnderdispersionError(DegenerateFitError):
    """Sample variance does not exceed the mean; the NB MLE does not exist."""


class ConvergenceError(BayesImpactError, RuntimeError):
    """The optimizer hit its iteration cap.

    The best iterate found is kept on ``best`` so callers can inspect it.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
