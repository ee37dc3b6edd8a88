"""Poisson likelihood, gamma prior and the negative binomial marginal.

Citation counts are modelled as Poisson with a journal-specific rate,
and the rate is gamma distributed across the journals of a field. The
functions here are the probabilistic primitives everything else builds
on. Densities are evaluated in log space.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DomainError, InputError
from .special import log_gamma


@dataclass(frozen=True)
class GammaPrior:
    """Gamma distribution over the Poisson rate.

    Parameters
    ----------
    alpha : float
        Shape, > 0.
    beta : float
        Rate (per year), > 0.
    """

    alpha: float
    beta: float

    def __post_init__(self):
        if not self.alpha > 0 or not self.beta > 0:
            raise DomainError(
                f"gamma prior needs alpha > 0 and beta > 0, got ({self.alpha}, {self.beta})"
            )

    @property
    def mean(self):
        return self.alpha / self.beta


@dataclass(frozen=True)
class PosteriorParams:
    """Gamma parameters after observing ``x_plus`` citations over ``t`` years."""

    alpha_star: float
    beta_star: float

    def as_prior(self):
        return GammaPrior(self.alpha_star, self.beta_star)

    @property
    def mean(self):
        return self.alpha_star / self.beta_star


@dataclass(frozen=True, eq=False)
class CitationSample:
    """Observed nonnegative integer counts for one journal or field.

    Summary statistics are derived from ``counts`` on demand. The sample
    variance uses the n - 1 denominator.
    """

    label: str
    counts: np.ndarray

    def __post_init__(self):
        raw = np.asarray(self.counts)
        if raw.ndim != 1 or raw.size == 0:
            raise InputError(f"sample {self.label!r} must be a nonempty 1-d collection")
        arr = raw.astype(np.int64)
        if not np.array_equal(arr, raw):
            raise InputError(f"sample {self.label!r} contains non-integer counts")
        if np.any(arr < 0):
            raise InputError(f"sample {self.label!r} contains negative counts")
        arr.setflags(write=False)
        object.__setattr__(self, "counts", arr)

    def __len__(self):
        return self.counts.size

    @property
    def n(self):
        return self.counts.size

    @property
    def total(self):
        """Sum of all counts (x-plus)."""
        return int(self.counts.sum())

    @property
    def mean(self):
        return self.total / self.n

    @cached_property
    def variance(self):
        if self.n < 2:
            return 0.0
        return float(np.var(self.counts, ddof=1))

    @property
    def dispersion_index(self):
        if self.mean == 0:
            raise DomainError(f"sample {self.label!r} has zero mean")
        return self.variance / self.mean

    @cached_property
    def frequencies(self):
        """Distinct values and how often each occurs."""
        values, freqs = np.unique(self.counts, return_counts=True)
        values.setflags(write=False)
        freqs.setflags(write=False)
        return values, freqs


def as_prior(obj):
    """Coerce a prior-like object into a GammaPrior.

    Accepts GammaPrior, PosteriorParams, a negative binomial fit (anything
    with ``alpha_hat``/``beta_hat``) or an ``(alpha, beta)`` pair.
    """
    if isinstance(obj, GammaPrior):
        return obj
    if isinstance(obj, PosteriorParams):
        return obj.as_prior()
    if hasattr(obj, "alpha_hat") and hasattr(obj, "beta_hat"):
        return GammaPrior(obj.alpha_hat, obj.beta_hat)
    if hasattr(obj, "prior") and callable(obj.prior):
        return obj.prior()
    try:
        alpha, beta = obj
    except (TypeError, ValueError):
        raise InputError(f"cannot interpret {obj!r} as a gamma prior") from None
    return GammaPrior(alpha, beta)


def _check_counts(x):
    arr = np.asarray(x)
    if np.any(arr < 0):
        raise DomainError("counts must be nonnegative")
    return arr.astype(float)


def poisson_logpmf(x, theta):
    if not theta > 0:
        raise DomainError(f"Poisson rate must be positive, got {theta}")
    xs = _check_counts(x)
    out = xs * np.log(theta) - theta - log_gamma(xs + 1.0)
    return float(out) if np.ndim(out) == 0 else out


def poisson_pmf(x, theta):
    """P(X = x) for X ~ Poisson(theta)."""
    out = np.exp(poisson_logpmf(x, theta))
    return float(out) if np.ndim(out) == 0 else out


def gamma_logpdf(theta, prior):
    th = np.asarray(theta, dtype=float)
    if np.any(~(th > 0)):
        raise DomainError("gamma density is defined for theta > 0")
    a, b = float(prior.alpha), float(prior.beta)
    out = a * np.log(b) + (a - 1.0) * np.log(th) - b * th - log_gamma(a)
    return float(out) if np.ndim(out) == 0 else out


def gamma_pdf(theta, prior):
    """Gamma density with shape ``prior.alpha`` and rate ``prior.beta``."""
    out = np.exp(gamma_logpdf(theta, prior))
    return float(out) if np.ndim(out) == 0 else out


def negbin_logpmf(x, prior):
    xs = _check_counts(x)
    a, b = float(prior.alpha), float(prior.beta)
    out = (
        log_gamma(a + xs)
        - log_gamma(a)
        - log_gamma(xs + 1.0)
        + a * np.log(b / (b + 1.0))
        - xs * np.log1p(b)
    )
    return float(out) if np.ndim(out) == 0 else out


def negbin_pmf(x, prior):
    """Marginal pmf of the Poisson-gamma mixture, NB(alpha, 1/(beta + 1))."""
    out = np.exp(negbin_logpmf(x, prior))
    return float(out) if np.ndim(out) == 0 else out


def posterior_update(prior, x_plus, t):
    """Conjugate update of the gamma prior.

    Observing ``x_plus`` citations in total over ``t`` years moves the
    prior to Gamma(alpha + x_plus, beta + t). ``t`` may be any
    nonnegative real.
    """
    if x_plus < 0 or t < 0:
        raise DomainError(f"x_plus and t must be nonnegative, got ({x_plus}, {t})")
    return PosteriorParams(prior.alpha + x_plus, prior.beta + t)


def negbin_moments(prior):
    """Mean and variance of the negative binomial marginal."""
    a, b = prior.alpha, prior.beta
    return a / b, a * (b + 1) / (b * b)
