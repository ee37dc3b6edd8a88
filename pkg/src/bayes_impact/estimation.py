"""Maximum likelihood fits of Poisson and negative binomial count models.

The negative binomial is parameterised by the gamma mixing prior
(alpha shape, beta rate), so a fitted model doubles as the prior used
for scoring. Model choice between the two uses AIC.
"""

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.optimize import minimize

from .errors import ConvergenceError, DegenerateFitError, DomainError, InputError, UnderdispersionError
from .model import GammaPrior
from .special import digamma, log_gamma, trigamma

log = logging.getLogger(__name__)

GRAD_TOL = 1e-8
MAX_ITER = 500


def aic(k, ell_max):
    """Akaike information criterion, 2 (k - ell_max)."""
    if k < 1:
        raise DomainError("parameter count must be at least 1")
    return float(2.0 * (k - ell_max))


def index_of_dispersion(sample):
    """Variance-to-mean ratio (n - 1 variance)."""
    return sample.dispersion_index


@dataclass(frozen=True)
class PoissonFit:
    theta_hat: float
    log_likelihood: float
    aic: float
    n: int


@dataclass(frozen=True)
class NegBinFit:
    alpha_hat: float
    beta_hat: float
    log_likelihood: float
    aic: float
    n: int
    converged: bool
    iterations: int

    def prior(self):
        return GammaPrior(self.alpha_hat, self.beta_hat)

    @property
    def mean(self):
        return self.alpha_hat / self.beta_hat


class Model(str, Enum):
    POISSON = "Poisson"
    NEGBIN = "NegBin"


@dataclass(frozen=True)
class ModelSelection:
    """Both fits for one sample and the AIC winner.

    ``negbin`` is None when the sample is not overdispersed.
    """

    label: str
    poisson: PoissonFit
    negbin: "NegBinFit | None"
    winner: Model

    @property
    def aic_margin(self):
        """Poisson AIC minus NB AIC (positive favours NB); None without NB."""
        if self.negbin is None:
            return None
        return self.poisson.aic - self.negbin.aic

    def prior(self):
        """Gamma prior for scoring; refuses when no NB fit is available."""
        if self.negbin is None:
            raise InputError(
                f"{self.label!r} has no negative binomial fit, so no gamma prior for scoring"
            )
        return self.negbin.prior()


def fit_poisson(sample):
    if sample.n == 0:
        raise InputError("cannot fit an empty sample")
    theta = sample.mean
    if theta == 0:
        raise DegenerateFitError(f"{sample.label!r}: all counts are zero, Poisson MLE is 0")
    values, freqs = sample.frequencies
    ll = sample.total * np.log(theta) - sample.n * theta - float(
        np.dot(freqs, log_gamma(values + 1.0))
    )
    return PoissonFit(theta, float(ll), aic(1, ll), sample.n)


class _NegBinLikelihood:
    """Log-likelihood of NB(alpha, beta) with derivatives, on grouped counts."""

    def __init__(self, sample):
        self.values, freqs = sample.frequencies
        self.freqs = freqs.astype(float)
        self.values_f = self.values.astype(float)
        self.n = float(sample.n)
        self.total = float(sample.total)
        self.const = float(np.dot(self.freqs, log_gamma(self.values_f + 1.0)))

    def loglik(self, alpha, beta):
        n, s = self.n, self.total
        return (
            float(np.dot(self.freqs, log_gamma(alpha + self.values_f)))
            - n * log_gamma(alpha)
            - self.const
            + n * alpha * np.log(beta)
            - (n * alpha + s) * np.log1p(beta)
        )

    def gradient(self, alpha, beta):
        n, s = self.n, self.total
        # differences psi(alpha + x) - psi(alpha) keep the summands small
        d_alpha = float(
            np.dot(self.freqs, digamma(alpha + self.values_f) - digamma(alpha))
        ) - n * np.log1p(1.0 / beta)
        d_beta = (n * alpha - s * beta) / (beta * (1.0 + beta))
        return np.array([d_alpha, d_beta])

    def hessian(self, alpha, beta):
        n, s = self.n, self.total
        h_aa = float(np.dot(self.freqs, trigamma(alpha + self.values_f))) - n * trigamma(alpha)
        h_ab = n / beta - n / (1.0 + beta)
        h_bb = -n * alpha / beta**2 + (n * alpha + s) / (1.0 + beta) ** 2
        return np.array([[h_aa, h_ab], [h_ab, h_bb]])

    def log_coords(self, p):
        """Value, gradient and Hessian in (log alpha, log beta)."""
        a, b = np.exp(p)
        g = self.gradient(a, b)
        h = self.hessian(a, b)
        scale = np.array([a, b])
        g_log = g * scale
        h_log = h * np.outer(scale, scale) + np.diag(g_log)
        return self.loglik(a, b), g, g_log, h_log


def moment_estimates(mean, variance):
    """Method-of-moments start: alpha0 = m^2/(v-m), beta0 = m/(v-m)."""
    if not variance > mean:
        raise UnderdispersionError(
            f"variance {variance:g} does not exceed mean {mean:g}; NB MLE lies on the Poisson boundary"
        )
    excess = variance - mean
    return mean * mean / excess, mean / excess


def _newton(lik, p0, max_iter):
    """Damped Newton ascent; returns (params, loglik, iterations, converged).

    Iterates past ``GRAD_TOL`` while the gradient keeps shrinking so the
    returned point is not left just under the threshold.
    """
    p = np.asarray(p0, dtype=float)
    ll, g, g_log, h_log = lik.log_coords(p)
    gnorm = np.max(np.abs(g))
    for it in range(1, max_iter + 1):
        if gnorm < GRAD_TOL * 1e-3:
            return p, ll, it - 1, True
        try:
            eig = np.linalg.eigvalsh(h_log)
            if np.all(eig < 0):
                step = np.linalg.solve(-h_log, g_log)
            else:
                # not concave here: damped ascent along the gradient
                step = g_log / (np.max(np.abs(eig)) + 1.0)
        except np.linalg.LinAlgError:
            step = g_log / (np.max(np.abs(g_log)) + 1.0)
        step = np.clip(step, -2.0, 2.0)
        scale = 1.0
        for _ in range(60):
            cand = p + scale * step
            ll_c = lik.loglik(*np.exp(cand))
            if np.isfinite(ll_c) and ll_c >= ll - 1e-12 * abs(ll):
                break
            scale *= 0.5
        else:
            return p, ll, it, gnorm < GRAD_TOL
        state = lik.log_coords(cand)
        g_new = np.max(np.abs(state[1]))
        if gnorm < GRAD_TOL and g_new >= gnorm:
            # at the rounding floor
            return p, ll, it, True
        p = cand
        ll, g, g_log, h_log = state
        gnorm = g_new
    return p, ll, max_iter, gnorm < GRAD_TOL


def fit_negbin(sample, max_iter=MAX_ITER):
    """Negative binomial MLE.

    Newton's method on (log alpha, log beta) with the exact Hessian,
    started from the moment estimates. Falls back to Nelder-Mead
    followed by a Newton polish when Newton stalls.

    Raises
    ------
    DegenerateFitError
        All counts are zero.
    UnderdispersionError
        Sample variance <= sample mean.
    ConvergenceError
        Gradient did not drop below ``GRAD_TOL``; ``best`` holds the
        best iterate as a NegBinFit.
    """
    if sample.mean == 0:
        raise DegenerateFitError(f"{sample.label!r}: all counts are zero")
    alpha0, beta0 = moment_estimates(sample.mean, sample.variance)
    lik = _NegBinLikelihood(sample)
    p0 = np.log([alpha0, beta0])
    ll0 = lik.loglik(alpha0, beta0)

    p, ll, iters, ok = _newton(lik, p0, max_iter)
    if not ok:
        log.info("%s: Newton stalled after %d iterations, trying Nelder-Mead", sample.label, iters)
        res = minimize(
            lambda q: -lik.loglik(*np.exp(q)),
            p0,
            method="Nelder-Mead",
            options={"xatol": 1e-10, "fatol": 1e-12, "maxiter": 4000},
        )
        p2, ll2, it2, ok = _newton(lik, res.x, max_iter)
        iters += res.nit + it2
        if ll2 >= ll:
            p, ll = p2, ll2

    # never return something worse than the starting point
    if ll < ll0:
        p, ll = p0, ll0
    alpha, beta = (float(v) for v in np.exp(p))
    fit = NegBinFit(alpha, beta, float(ll), aic(2, ll), sample.n, bool(ok), iters)
    if not ok:
        raise ConvergenceError(
            f"{sample.label!r}: NB fit did not converge in {max_iter} iterations", best=fit
        )
    return fit


def negbin_gradient(sample, alpha, beta):
    """Analytic gradient of the NB log-likelihood in (alpha, beta)."""
    return _NegBinLikelihood(sample).gradient(alpha, beta)


def negbin_loglik(sample, alpha, beta):
    return _NegBinLikelihood(sample).loglik(alpha, beta)


def select_model(sample):
    """Fit both models and pick the lower AIC (ties go to Poisson)."""
    pois = fit_poisson(sample)
    try:
        nb = fit_negbin(sample)
    except UnderdispersionError:
        log.info("%s: not overdispersed, Poisson only", sample.label)
        nb = None
    if nb is not None and nb.aic < pois.aic:
        winner = Model.NEGBIN
    else:
        winner = Model.POISSON
    return ModelSelection(sample.label, pois, nb, winner)
