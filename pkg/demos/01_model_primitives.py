"""Poisson likelihood, gamma prior and the negative binomial they imply.

A journal's citation rate theta is uncertain, so we put a gamma prior on
it. Integrating theta out turns the Poisson into a negative binomial,
and observing citations simply shifts the two gamma parameters.
"""

from bayes_impact import GammaPrior, gamma_pdf, negbin_moments, negbin_pmf, poisson_pmf, posterior_update

prior = GammaPrior(alpha=1.99, beta=0.21)
print(f"prior mean citation rate: {prior.mean:.3f}")

mean, var = negbin_moments(prior)
print(f"marginal mean {mean:.3f}, variance {var:.3f} (a Poisson would have variance {mean:.3f})")

print("\n x   NB pmf    Poisson pmf at the same mean")
for x in (0, 1, 5, 10, 20, 40):
    print(f"{x:2d}  {negbin_pmf(x, prior):.5f}  {poisson_pmf(x, prior.mean):.5f}")

# an article with 12 citations over 4 periods
post = posterior_update(prior, x_plus=12, t=4)
print(f"\nposterior: alpha* = {post.alpha_star}, beta* = {post.beta_star:.2f}, mean {post.mean:.3f}")
print(f"prior density at the posterior mean: {gamma_pdf(post.mean, prior):.4f}")
