"""Field- and time-normalised citation impact from a Poisson-gamma model."""

__version__ = "0.1.0"

from .analytics import (
    ArticleRecord,
    ComparisonReport,
    DescriptiveStats,
    compare_fcr,
    describe,
    fitted_pmf_series,
    pearson,
)
from .elasticity import ElasticityCurve, citation_elasticity, elasticity_curves, time_elasticity
from .errors import (
    BayesImpactError,
    ConvergenceError,
    DegenerateFitError,
    DomainError,
    InputError,
    UnderdispersionError,
)
from .estimation import (
    Model,
    ModelSelection,
    NegBinFit,
    PoissonFit,
    aic,
    fit_negbin,
    fit_poisson,
    index_of_dispersion,
    select_model,
)
from .model import (
    CitationSample,
    GammaPrior,
    PosteriorParams,
    gamma_pdf,
    negbin_moments,
    negbin_pmf,
    poisson_pmf,
    posterior_update,
)
from .scoring import (
    CredibilityDecomposition,
    ScoreQuery,
    ScoreTable,
    bayes_estimate,
    credibility_decomposition,
    credibility_weight,
    impact_score,
    score,
    score_delta_citations,
    score_delta_time,
    score_table,
)
from .special import digamma, log_gamma, trigamma
from .synthetic import (
    SimulationConfig,
    recovery_experiment,
    sample_negbin,
    sample_poisson,
)
