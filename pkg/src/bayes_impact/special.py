"""Log-gamma, digamma and trigamma.

All three use the same strategy: shift the argument upward with the
recurrence relation until it is large, then evaluate an asymptotic
(Stirling / de Moivre) series. Inputs may be scalars or arrays; scalar
input gives a Python float back.
"""

import math

import numpy as np

from .errors import DomainError

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

# B_{2k} / (2k (2k - 1)) for k = 1..8
_LGAMMA_COEFFS = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)

# B_{2k} / (2k) for k = 1..7
_DIGAMMA_COEFFS = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)

# B_{2k} for k = 1..7
_TRIGAMMA_COEFFS = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
)

_LGAMMA_SHIFT = 15.0
_PSI_SHIFT = 10.0


def _prepare(x, name):
    arr = np.asarray(x, dtype=float)
    if np.any(~(arr > 0)):
        raise DomainError(f"{name} requires x > 0")
    return arr


def _finish(arr, scalar):
    return float(arr) if scalar else arr


def log_gamma(x):
    """Natural log of the gamma function for x > 0."""
    scalar = np.ndim(x) == 0
    z = np.array(_prepare(x, "log_gamma"), dtype=float, copy=True)
    # accumulate x (x+1) ... (x+k-1) and take a single log at the end
    prod = np.ones_like(z)
    small = z < _LGAMMA_SHIFT
    while np.any(small):
        prod[small] *= z[small]
        z[small] += 1.0
        small = z < _LGAMMA_SHIFT
    inv = 1.0 / z
    inv2 = inv * inv
    series = np.zeros_like(z)
    for c in reversed(_LGAMMA_COEFFS):
        series = series * inv2 + c
    out = (z - 0.5) * np.log(z) - z + _HALF_LOG_2PI + series * inv
    out = out - np.log(prod)
    return _finish(out, scalar)


def digamma(x):
    """Derivative of log_gamma for x > 0."""
    scalar = np.ndim(x) == 0
    z = np.array(_prepare(x, "digamma"), dtype=float, copy=True)
    acc = np.zeros_like(z)
    small = z < _PSI_SHIFT
    while np.any(small):
        acc[small] -= 1.0 / z[small]
        z[small] += 1.0
        small = z < _PSI_SHIFT
    inv2 = 1.0 / (z * z)
    series = np.zeros_like(z)
    for c in reversed(_DIGAMMA_COEFFS):
        series = series * inv2 + c
    out = np.log(z) - 0.5 / z - series * inv2 + acc
    return _finish(out, scalar)


def trigamma(x):
    """Second derivative of log_gamma for x > 0."""
    scalar = np.ndim(x) == 0
    z = np.array(_prepare(x, "trigamma"), dtype=float, copy=True)
    acc = np.zeros_like(z)
    small = z < _PSI_SHIFT
    while np.any(small):
        acc[small] += 1.0 / (z[small] * z[small])
        z[small] += 1.0
        small = z < _PSI_SHIFT
    inv = 1.0 / z
    inv2 = inv * inv
    series = np.zeros_like(z)
    for c in reversed(_TRIGAMMA_COEFFS):
        series = series * inv2 + c
    out = inv + 0.5 * inv2 + series * inv2 * inv + acc
    return _finish(out, scalar)
