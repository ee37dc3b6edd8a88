"""Citation and time elasticities of the impact score.

Both use the discrete steps of the score itself (one citation, two
years), which gives the closed forms below. Neither depends on omega.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InputError
from .model import as_prior

CITATIONS = "citations"
TIME = "time"


@dataclass(frozen=True)
class ElasticityCurve:
    label: str
    axis: str
    grid: np.ndarray
    elasticities: np.ndarray

    def rows(self):
        return [(self.label, self.axis, g, e) for g, e in zip(self.grid, self.elasticities)]


def citation_elasticity(alpha, x_plus):
    """x / (alpha + x), in [0, 1)."""
    if not alpha > 0 or np.any(np.asarray(x_plus) < 0):
        raise DomainError("need alpha > 0 and x_plus >= 0")
    return x_plus / (alpha + x_plus)


def time_elasticity(beta, t):
    """-t / (beta + t + 2), in (-1, 0]."""
    if not beta > 0 or np.any(np.asarray(t) < 0):
        raise DomainError("need beta > 0 and t >= 0")
    return -t / (beta + t + 2)


def elasticity_curves(fits, x_grid, t_grid):
    """One citation curve and one time curve per journal.

    ``fits`` maps a journal label to anything ``as_prior`` accepts.
    Output is ordered by label, citations before time.
    """
    if not fits:
        raise InputError("no fits given")
    xs = np.asarray(x_grid, dtype=float)
    ts = np.asarray(t_grid, dtype=float)
    if xs.size == 0 or ts.size == 0:
        raise InputError("elasticity grids must be nonempty")
    curves = []
    for label in sorted(fits):
        prior = as_prior(fits[label])
        curves.append(ElasticityCurve(label, CITATIONS, xs, citation_elasticity(prior.alpha, xs)))
        curves.append(ElasticityCurve(label, TIME, ts, time_elasticity(prior.beta, ts)))
    return curves
