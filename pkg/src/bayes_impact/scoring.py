"""The Bayesian Impact Score and its credibility form.

For a journal with gamma prior (alpha, beta), a publication that has
collected ``x_plus`` citations ``t`` years after publication scores

    F*(x_plus, t) = omega * (beta / alpha) * (alpha + x_plus) / (beta + t)

i.e. the posterior mean rate rescaled so that a brand-new publication
(x_plus = 0, t = 0) scores exactly ``omega``.

The scalar functions use plain arithmetic only, so they also accept
``fractions.Fraction`` arguments and then return exact rationals.
"""

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal

import numpy as np

from .errors import DomainError, InputError
from .model import as_prior

DEFAULT_T_GRID = (2, 4, 6, 8)
DEFAULT_X_GRID = tuple(range(0, 101, 10))


@dataclass(frozen=True)
class ScoreQuery:
    x_plus: int
    t: float
    omega: float = 1

    def __post_init__(self):
        if self.x_plus < 0 or self.t < 0:
            raise DomainError(f"x_plus and t must be nonnegative, got ({self.x_plus}, {self.t})")
        if not self.omega > 0:
            raise DomainError(f"omega must be positive, got {self.omega}")


@dataclass(frozen=True)
class CredibilityDecomposition:
    """Score split into a data part and a prior part.

    ``sample_mean_term`` and ``prior_mean_term`` are the two weighted
    contributions already multiplied by omega * beta / alpha, so they add
    up to ``score``.
    """

    gamma: float
    sample_mean_term: float
    prior_mean_term: float
    score: float


@dataclass(frozen=True)
class ScoreTable:
    """Scores on a (t, x_plus) grid; rows follow ``t_grid``."""

    label: str
    t_grid: tuple
    x_grid: tuple
    values: np.ndarray
    omega: float = 1.0

    def rounded(self, digits=2):
        return [[display_round(v, digits) for v in row] for row in self.values]


def display_round(value, digits=2):
    """Round half-to-even on the shortest decimal repr of ``value``."""
    q = Decimal(1).scaleb(-digits)
    return float(Decimal(repr(float(value))).quantize(q, rounding=ROUND_HALF_EVEN))


def bayes_estimate(prior, x_plus, t):
    """Posterior mean of the Poisson rate, (alpha + x_plus) / (beta + t)."""
    prior = as_prior(prior)
    return (prior.alpha + x_plus) / (prior.beta + t)


def impact_score(prior, q):
    prior = as_prior(prior)
    a, b = prior.alpha, prior.beta
    return q.omega * b * (a + q.x_plus) / (a * (b + q.t))


def score(prior, x_plus, t, omega=1):
    """Shorthand for ``impact_score(prior, ScoreQuery(x_plus, t, omega))``."""
    return impact_score(prior, ScoreQuery(x_plus, t, omega))


def score_table(prior, omega=1.0, t_grid=DEFAULT_T_GRID, x_grid=DEFAULT_X_GRID, label=""):
    """Score every (t, x_plus) pair; values[i, j] is at (x_grid[j], t_grid[i])."""
    prior = as_prior(prior)
    t_arr = np.asarray(t_grid, dtype=float)
    x_arr = np.asarray(x_grid, dtype=float)
    if t_arr.size == 0 or x_arr.size == 0:
        raise InputError("score grids must be nonempty")
    if np.any(np.diff(t_arr) <= 0) or np.any(np.diff(x_arr) <= 0):
        raise InputError("score grids must be strictly ascending")
    if t_arr[0] < 0 or x_arr[0] < 0:
        raise DomainError("grid values must be nonnegative")
    if not omega > 0:
        raise DomainError(f"omega must be positive, got {omega}")
    a, b = float(prior.alpha), float(prior.beta)
    values = omega * b * (a + x_arr[None, :]) / (a * (b + t_arr[:, None]))
    return ScoreTable(label, tuple(t_grid), tuple(x_grid), values, omega)


def score_delta_citations(prior, t, omega=1):
    """F*(x + 1, t) - F*(x, t); the same for every x."""
    prior = as_prior(prior)
    a, b = prior.alpha, prior.beta
    return omega * b / (a * (b + t))


def score_delta_time(prior, x_plus, t, omega=1):
    """F*(x, t + 2) - F*(x, t), always negative."""
    prior = as_prior(prior)
    a, b = prior.alpha, prior.beta
    return -2 * omega * b * (a + x_plus) / (a * (b + t) * (b + t + 2))


def credibility_weight(beta, t):
    """Weight t / (beta + t) placed on the observed citation rate."""
    if not beta > 0 or t < 0:
        raise DomainError(f"need beta > 0 and t >= 0, got ({beta}, {t})")
    return t / (beta + t)


def credibility_decomposition(prior, sample_mean, x_plus, t, omega=1):
    """Write the score as a convex mix of the observed and prior means.

    ``sample_mean`` must equal ``x_plus / t`` (pass None to derive it).
    At t = 0 there is no data, so x_plus must be 0 and all weight sits
    on the prior.
    """
    prior = as_prior(prior)
    a, b = prior.alpha, prior.beta
    if not omega > 0:
        raise DomainError(f"omega must be positive, got {omega}")
    if t < 0 or x_plus < 0:
        raise DomainError("x_plus and t must be nonnegative")
    if t == 0:
        if x_plus != 0:
            raise InputError("x_plus > 0 at t = 0 has no credibility decomposition")
        xbar = 0
    else:
        xbar = x_plus / t
        if sample_mean is not None:
            if not _same(sample_mean, xbar):
                raise InputError(
                    f"sample_mean {sample_mean} is inconsistent with x_plus/t = {x_plus}/{t}"
                )
            # keep the caller's value, which may be exact where x_plus / t is not
            xbar = sample_mean
    gamma = credibility_weight(b, t)
    scale = omega * b / a
    data_term = scale * gamma * xbar
    # 1 - gamma, without the cancellation when gamma is close to 1
    prior_term = scale * (b / (b + t)) * (a / b)
    return CredibilityDecomposition(gamma, data_term, prior_term, data_term + prior_term)


def _same(u, v):
    if u == v:
        return True
    try:
        return abs(float(u) - float(v)) <= 1e-12 * max(1.0, abs(float(v)))
    except (TypeError, ValueError):
        return False
