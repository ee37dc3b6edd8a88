from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bayes_impact import (
    DomainError,
    GammaPrior,
    InputError,
    citation_elasticity,
    elasticity_curves,
    score,
    time_elasticity,
)


def discrete_citation(p, x, t, w):
    return (score(p, x + 1, t, w) - score(p, x, t, w)) * x / score(p, x, t, w)


def discrete_time(p, x, t, w):
    return (score(p, x, t + 2, w) - score(p, x, t, w)) / 2 * t / score(p, x, t, w)


def test_values():
    assert citation_elasticity(1.99, 0) == 0
    assert citation_elasticity(1.99, 10) == pytest.approx(0.8340283569641368, rel=1e-15)
    assert time_elasticity(0.21, 0) == 0
    assert time_elasticity(0.21, 2) == pytest.approx(-0.4750593824228029, rel=1e-15)


def test_domain():
    with pytest.raises(DomainError):
        citation_elasticity(0, 1)
    with pytest.raises(DomainError):
        time_elasticity(0.1, -1)


@given(st.floats(0.01, 100), st.floats(0.01, 50), st.integers(0, 10_000), st.floats(0, 500))
def test_bounds(a, b, x, t):
    assert 0 <= citation_elasticity(a, x) < 1
    assert -1 < time_elasticity(b, t) <= 0


@given(st.fractions(F(1, 100), 50), st.fractions(F(1, 100), 20), st.integers(0, 1000),
       st.integers(0, 100), st.sampled_from([F(1, 2), F(1), F(7)]))
def test_discrete_definition_exact(a, b, x, t, w):
    p = GammaPrior(a, b)
    assert discrete_citation(p, x, t, w) == citation_elasticity(a, x)
    assert discrete_time(p, x, t, w) == time_elasticity(b, t)


def test_discrete_definition_floats():
    p = GammaPrior(1.99, 0.21)
    for w in (0.5, 1, 7):
        for x in range(0, 101, 7):
            for t in (0, 2, 4.5, 8):
                assert discrete_citation(p, x, t, w) == pytest.approx(citation_elasticity(1.99, x), rel=1e-12, abs=1e-15)
                assert discrete_time(p, x, t, w) == pytest.approx(time_elasticity(0.21, t), rel=1e-12, abs=1e-15)


def test_monotonicity():
    x = np.arange(0, 101)
    e = citation_elasticity(1.5, x)
    assert np.all(np.diff(e) > 0)
    assert citation_elasticity(1.0, 10) > citation_elasticity(2.0, 10)
    assert time_elasticity(0.3, 4) > time_elasticity(0.1, 4)
    assert np.all(np.diff(np.abs(time_elasticity(0.2, np.arange(0, 40, 2)))) > 0)


def test_curves(priors):
    curves = elasticity_curves(priors, range(0, 101), range(0, 21, 2))
    assert len(curves) == 2 * len(priors)
    cit = {c.label: c for c in curves if c.axis == "citations"}
    tim = {c.label: c for c in curves if c.axis == "time"}
    assert all(np.all(c.elasticities < 1) for c in cit.values())
    assert all(np.all((c.elasticities > -1) & (c.elasticities <= 0)) for c in tim.values())

    by_alpha = sorted(priors, key=lambda j: (priors[j].alpha, j))
    for i in range(1, 101, 9):
        by_elast = sorted(priors, key=lambda j: (-cit[j].elasticities[i], j))
        assert by_elast == by_alpha
    by_beta = sorted(priors, key=lambda j: (priors[j].beta, j))
    for i in range(1, 11):
        assert sorted(priors, key=lambda j: (tim[j].elasticities[i], j)) == by_beta


def test_curves_need_input():
    with pytest.raises(InputError):
        elasticity_curves({}, [1], [1])
