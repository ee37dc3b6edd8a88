"""Check that the fitting code recovers known parameters.

Each run draws 100,000 articles from a gamma-Poisson mixture and refits.
Errors shrink roughly as one over the square root of n.
"""

from pathlib import Path

from bayes_impact import SimulationConfig, recovery_experiment
from bayes_impact.io import read_priors

priors = read_priors(Path(__file__).parent / "data" / "journal_fits.csv")
for n in (1_000, 100_000):
    print(f"\nn = {n}")
    for i, (journal, p) in enumerate(sorted(priors.items())):
        res = recovery_experiment(SimulationConfig(p.alpha, p.beta, n, seed=i))
        if res.alpha_hat is None:
            print(f"  {journal:<15} {res.flags[0]}")
            continue
        print(f"  {journal:<15} alpha {res.alpha_hat:7.4f} (true {p.alpha}), "
              f"beta {res.beta_hat:.4f} (true {p.beta}), max rel error {res.max_rel_error:.2%}")
