"""Shared oracles and constructors for the test suite."""

import bisect
import csv
import math
from collections import Counter
from pathlib import Path

import numpy as np
from scipy import integrate, stats

from bayes_impact import CitationSample, GammaPrior

DATA = Path(__file__).parent / "data"


def _rows(name):
    with open(DATA / name, newline="") as fh:
        return list(csv.DictReader(line for line in fh if not line.startswith("#")))


def journal_priors():
    return {r["journal_id"]: GammaPrior(float(r["alpha_hat"]), float(r["beta_hat"]))
            for r in _rows("journal_fits.csv")}


def journal_fit_rows():
    return _rows("journal_fits.csv")


def published_scores():
    """{journal: {t: [11 values for x = 0, 10, ..., 100]}}"""
    out = {}
    for r in _rows("published_scores.csv"):
        vals = [float(r[str(x)]) for x in range(0, 101, 10)]
        out.setdefault(r["journal_id"], {})[int(r["t"])] = vals
    return out


def journal_moments():
    return {r["journal_id"]: (float(r["mean"]), float(r["variance"]), float(r["dispersion_index"]))
            for r in _rows("journal_moments.csv")}


def mixture_quadrature(x, prior):
    """Integral over theta of Poisson(x | theta) * Gamma(theta | prior)."""
    a, b = prior.alpha, prior.beta
    upper = stats.gamma.isf(1e-12, prior.alpha, scale=1.0 / prior.beta)
    mode = max(x, prior.alpha - 1.0) / (1.0 + prior.beta) if prior.alpha > 1 or x > 0 else 0.0
    points = [p for p in (mode,) if 0 < p < upper]
    val, _ = integrate.quad(
        lambda th: math.exp(x * math.log(th) - th - math.lgamma(x + 1)
                            + a * math.log(b) + (a - 1) * math.log(th) - b * th
                            - math.lgamma(a)) if th > 0 else float(x == 0 and a == 1) * b,
        0.0, upper, points=points or None, epsabs=1e-13, epsrel=1e-12, limit=400,
    )
    return val


def counts_with_moments(mean, variance, n=100_000, seed=7):
    """Integer counts whose mean and n-1 variance hit the targets.

    Starts from a gamma-Poisson draw with the right moments, fixes the
    sum by unit steps, then fixes the sum of squares with pair moves that
    keep the sum constant. Pair move (va -> va + 1, vb -> vb - 1) changes
    the sum of squares by 2 (va - vb) + 2.
    """
    rng = np.random.default_rng(seed)
    excess = variance - mean
    x = rng.poisson(rng.gamma(mean**2 / excess, excess / mean, n))
    hist = Counter(x.tolist())

    target_sum = round(n * mean)
    diff = target_sum - int(x.sum())
    while diff:
        if diff > 0:
            v = min(hist)
            step = 1
        else:
            v = max(k for k in hist if k > 0)
            step = -1
        hist[v] -= 1
        hist[v + step] += 1
        if hist[v] == 0:
            del hist[v]
        diff -= step

    def sumsq():
        return sum(v * v * c for v, c in hist.items())

    target_q = round((n - 1) * variance + target_sum**2 / n)
    if (target_q - target_sum) % 2:
        target_q += 1
    delta = target_q - sumsq()
    while delta:
        support = sorted(hist)
        if delta > 0:
            # raise the top value, lower the smallest vb >= 1 that does not overshoot
            va = support[-1]
            i = bisect.bisect_left(support, max(1, va + 1 - delta // 2))
            vb = support[i]
            if vb == va and hist[va] < 2:
                vb = next(v for v in support if v >= 1 and hist[v] >= 2)
                va = vb
            moves = ((va, va + 1), (vb, vb - 1))
            change = 2 * (va - vb) + 2
        else:
            # lower a high value, raise the bottom one
            vb = support[0]
            i = bisect.bisect_right(support, vb + 1 + (-delta) // 2) - 1
            va = support[i]
            if va < vb + 2:
                va, vb = next((v + 2, v) for v in support if hist.get(v + 2, 0))
            moves = ((va, va - 1), (vb, vb + 1))
            change = -2 * (va - vb - 1)
        for old, new in moves:
            hist[old] -= 1
            hist[new] += 1
            if hist[old] == 0:
                del hist[old]
        delta -= change
    counts = np.repeat(np.array(list(hist.keys())), np.array(list(hist.values())))
    return CitationSample("constructed", counts)


def sig_figs(value, digits):
    return float(f"{value:.{digits}g}")


def ulps_close(a, b, k=8):
    """|a - b| within k units of roundoff at the larger magnitude."""
    scale = max(abs(a), abs(b), 1e-300)
    return abs(a - b) <= k * math.ulp(scale)
