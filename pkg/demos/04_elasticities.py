"""How sensitive is the score to one more citation or one more year?

Both elasticities depend on a single prior parameter: alpha governs
the response to citations and beta the response to age.
"""

from pathlib import Path

from bayes_impact import citation_elasticity, elasticity_curves, time_elasticity
from bayes_impact.io import read_priors

priors = read_priors(Path(__file__).parent / "data" / "journal_fits.csv")
curves = elasticity_curves(priors, x_grid=range(0, 101, 25), t_grid=(2, 4, 8, 16))

for c in curves:
    vals = " ".join(f"{e:+.3f}" for e in c.elasticities)
    print(f"{c.label:<15} {c.axis:<9} {vals}")

# a journal with a small alpha reacts strongly to early citations
low, high = min(priors.values(), key=lambda p: p.alpha), max(priors.values(), key=lambda p: p.alpha)
print(f"\nat x+ = 10: alpha {low.alpha} -> {citation_elasticity(low.alpha, 10):.3f}, "
      f"alpha {high.alpha} -> {citation_elasticity(high.alpha, 10):.3f}")
print(f"at t = 6 with beta 0.21: {time_elasticity(0.21, 6):.3f}")
