"""Descriptive statistics and the comparison against an external indicator.

``compare_fcr`` scores every article of a cohort with its journal's
prior and sets the result beside the Field Citation Ratio (FCR) that
came with the article. The FCR is taken as given, never recomputed.
"""

import math
from collections import Counter, defaultdict
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import DomainError, InputError
from .model import as_prior, negbin_pmf, poisson_pmf
from .scoring import ScoreQuery, impact_score

MIN_PUB_YEAR = 1900

TABLE_COLUMNS = ("n", "mean", "se", "median", "sd", "cv", "kurtosis", "skewness", "min", "max")


@dataclass(frozen=True)
class ArticleRecord:
    article_id: str
    journal_id: str
    pub_year: int
    citations: int
    fcr: "float | None" = None

    def __post_init__(self):
        if self.pub_year < MIN_PUB_YEAR:
            raise InputError(f"article {self.article_id}: pub_year {self.pub_year} before {MIN_PUB_YEAR}")
        if self.citations < 0:
            raise InputError(f"article {self.article_id}: negative citations")
        if self.fcr is not None and not self.fcr >= 0:
            raise InputError(f"article {self.article_id}: FCR must be nonnegative")


@dataclass(frozen=True)
class DescriptiveStats:
    """Summary of one sample.

    ``cv``, ``skewness`` and ``kurtosis`` are None where undefined (zero
    mean for cv; zero spread or too few points for the shape moments).
    """

    n: int
    mean: float
    se: float
    median: float
    sd: float
    cv: "float | None"
    kurtosis: "float | None"
    skewness: "float | None"
    min: float
    max: float

    def as_row(self):
        return [getattr(self, c) for c in TABLE_COLUMNS]


def describe(values):
    """n, mean, SE, median, SD, CV, excess kurtosis, skewness, min, max.

    SD uses n - 1. Skewness is the adjusted Fisher-Pearson coefficient
    G1 = g1 * sqrt(n (n - 1)) / (n - 2) and kurtosis the bias-adjusted
    excess G2 = ((n + 1) g2 + 6) (n - 1) / ((n - 2)(n - 3)), where g1 and
    g2 are the plain moment ratios.
    """
    x = np.asarray(values, dtype=float).ravel()
    n = x.size
    if n == 0:
        raise InputError("describe needs at least one value")
    mean = float(x.mean())
    dev = x - mean
    m2 = float(np.mean(dev**2))
    sd = float(np.sqrt(np.sum(dev**2) / (n - 1))) if n > 1 else 0.0
    cv = sd / mean if mean != 0 else None
    skew = kurt = None
    if m2 > 0:
        g1 = float(np.mean(dev**3)) / m2**1.5
        g2 = float(np.mean(dev**4)) / m2**2 - 3.0
        if n > 2:
            skew = g1 * math.sqrt(n * (n - 1)) / (n - 2)
        if n > 3:
            kurt = ((n + 1) * g2 + 6.0) * (n - 1) / ((n - 2) * (n - 3))
    return DescriptiveStats(
        n=n,
        mean=mean,
        se=sd / math.sqrt(n),
        median=float(np.median(x)),
        sd=sd,
        cv=cv,
        kurtosis=kurt,
        skewness=skew,
        min=float(x.min()),
        max=float(x.max()),
    )


def pearson(x, y):
    """Product-moment correlation of two equally long vectors."""
    a = np.asarray(x, dtype=float).ravel()
    b = np.asarray(y, dtype=float).ravel()
    if a.size != b.size:
        raise InputError(f"length mismatch: {a.size} vs {b.size}")
    if a.size < 2:
        raise InputError("pearson needs at least two pairs")
    da = a - a.mean()
    db = b - b.mean()
    sa = math.sqrt(float(np.dot(da, da)))
    sb = math.sqrt(float(np.dot(db, db)))
    if sa == 0 or sb == 0:
        raise DomainError("pearson is undefined for a constant vector")
    r = float(np.dot(da / sa, db / sb))
    return min(1.0, max(-1.0, r))


def cv_ranking(stats):
    """Journal ids by CV, highest first; undefined CVs last, ties by id."""
    def key(j):
        cv = stats[j].cv
        return (cv is None, -(cv or 0.0), j)

    return sorted(stats, key=key)


@dataclass
class ComparisonReport:
    reference_year: int
    omega: float
    journals: list
    score_stats: dict
    fcr_stats: dict
    pearson_r: "float | None"
    n_pairs: int
    cv_ranking_score: list
    cv_ranking_fcr: list
    article_scores: dict = field(repr=False, default_factory=dict)

    def to_dict(self):
        return {
            "reference_year": self.reference_year,
            "omega": self.omega,
            "journals": list(self.journals),
            "pearson_r": self.pearson_r,
            "n_pairs": self.n_pairs,
            "cv_ranking": {"bayesian_score": self.cv_ranking_score, "fcr": self.cv_ranking_fcr},
            "stats": {
                "bayesian_score": {j: asdict(s) for j, s in self.score_stats.items()},
                "fcr": {j: asdict(s) for j, s in self.fcr_stats.items()},
            },
            "article_scores": dict(self.article_scores),
        }


def compare_fcr(articles, fits, reference_year, omega=1.0):
    """Score a cohort and compare it with the articles' FCR values.

    Parameters
    ----------
    articles : iterable of ArticleRecord
    fits : mapping
        journal id -> prior-like object (GammaPrior, NegBinFit, ...).
    reference_year : int
        Citation window end; each article's age is
        ``reference_year - pub_year`` in whole years.
    omega : float
        Score of a brand-new article.
    """
    articles = list(articles)
    if not articles:
        raise InputError("no articles to compare")
    missing = Counter(a.journal_id for a in articles if a.journal_id not in fits)
    if missing:
        detail = ", ".join(f"{j} ({c} articles)" for j, c in sorted(missing.items()))
        raise InputError(f"no fit for journal(s): {detail}")
    late = [a.article_id for a in articles if a.pub_year > reference_year]
    if late:
        raise InputError(f"reference year {reference_year} precedes publication of {late[:5]}")
    priors = {j: as_prior(fits[j]) for j in {a.journal_id for a in articles}}

    scores = defaultdict(list)
    fcrs = defaultdict(list)
    article_scores = {}
    pair_s, pair_f = [], []
    for a in articles:
        s = impact_score(priors[a.journal_id], ScoreQuery(a.citations, reference_year - a.pub_year, omega))
        article_scores[a.article_id] = s
        scores[a.journal_id].append(s)
        if a.fcr is not None:
            fcrs[a.journal_id].append(a.fcr)
            pair_s.append(s)
            pair_f.append(a.fcr)

    journals = sorted(scores)
    score_stats = {j: describe(scores[j]) for j in journals}
    fcr_stats = {j: describe(fcrs[j]) for j in journals if fcrs[j]}
    r = None
    if len(pair_s) >= 2:
        try:
            r = pearson(pair_f, pair_s)
        except DomainError:
            r = None
    return ComparisonReport(
        reference_year=reference_year,
        omega=omega,
        journals=journals,
        score_stats=score_stats,
        fcr_stats=fcr_stats,
        pearson_r=r,
        n_pairs=len(pair_s),
        cv_ranking_score=cv_ranking(score_stats),
        cv_ranking_fcr=cv_ranking(fcr_stats),
        article_scores=article_scores,
    )


@dataclass(frozen=True)
class PmfSeries:
    """Empirical frequencies beside the two fitted pmfs on 0..x_max."""

    label: str
    x: np.ndarray
    empirical: np.ndarray
    poisson: np.ndarray
    negbin: np.ndarray


def fitted_pmf_series(sample, poisson, negbin, x_max=None):
    if x_max is None:
        x_max = int(sample.counts.max())
    x = np.arange(x_max + 1)
    counts = np.bincount(sample.counts[sample.counts <= x_max], minlength=x_max + 1)
    return PmfSeries(
        sample.label,
        x,
        counts / sample.n,
        poisson_pmf(x, poisson.theta_hat),
        negbin_pmf(x, as_prior(negbin)),
    )


def total_variation(p, q):
    """Half the L1 distance between two aligned probability vectors."""
    return 0.5 * float(np.sum(np.abs(np.asarray(p) - np.asarray(q))))
