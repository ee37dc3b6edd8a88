"""Compare the Bayesian score with a field citation ratio on a cohort.

The FCR here is synthetic noise around the score, standing in for a
vendor metric; swap in real values with the ``compare`` CLI command.
"""

from pathlib import Path

import numpy as np

from bayes_impact import ArticleRecord, compare_fcr, score
from bayes_impact.io import read_priors

priors = read_priors(Path(__file__).parent / "data" / "journal_fits.csv")
rng = np.random.default_rng(5)
articles = []
for journal, prior in priors.items():
    for k in range(80):
        year = int(rng.integers(2015, 2023))
        cites = int(rng.poisson(rng.gamma(prior.alpha, 1 / prior.beta) * (2023 - year) / 2))
        fcr = score(prior, cites, 2023 - year) * float(rng.lognormal(0, 0.3))
        articles.append(ArticleRecord(f"{journal}-{k}", journal, year, cites, fcr))

report = compare_fcr(articles, priors, reference_year=2023)
print(f"{report.n_pairs} articles, Pearson r(FCR, score) = {report.pearson_r:.3f}\n")
print(f"{'journal':<15} {'mean':>6} {'sd':>6} {'cv':>6}")
for j in report.journals:
    s = report.score_stats[j]
    print(f"{j:<15} {s.mean:6.2f} {s.sd:6.2f} {s.cv:6.2f}")
print("\nmost to least variable by score:", ", ".join(report.cv_ranking_score))
print("most to least variable by FCR:  ", ", ".join(report.cv_ranking_fcr))
