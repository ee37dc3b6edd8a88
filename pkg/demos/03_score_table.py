"""Score grids for the eight reference journals.

The score of a brand-new article is omega (1 here). It then rises
linearly with citations and falls as the article ages without them.
"""

from pathlib import Path

from bayes_impact import credibility_decomposition, score_table
from bayes_impact.io import read_priors

priors = read_priors(Path(__file__).parent / "data" / "journal_fits.csv")

for journal in ("AgCell", "AmAnt"):
    table = score_table(priors[journal], label=journal)
    print(f"\n{journal}  (rows t, columns x+)")
    print("t   " + " ".join(f"{x:>6}" for x in table.x_grid))
    for t, row in zip(table.t_grid, table.rounded()):
        print(f"{t:<3} " + " ".join(f"{v:6.2f}" for v in row))

d = credibility_decomposition(priors["AgCell"], None, x_plus=30, t=4)
print(f"\nAgCell, 30 citations in 4 periods: weight on data {d.gamma:.3f}, "
      f"data term {d.sample_mean_term:.3f} + prior term {d.prior_mean_term:.3f} = {d.score:.3f}")
