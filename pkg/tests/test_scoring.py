from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate

from bayes_impact import (
    DomainError,
    GammaPrior,
    InputError,
    ScoreQuery,
    bayes_estimate,
    credibility_decomposition,
    credibility_weight,
    gamma_pdf,
    impact_score,
    posterior_update,
    score,
    score_delta_citations,
    score_delta_time,
    score_table,
)
from bayes_impact.scoring import display_round
from helpers import ulps_close

AGCELL = GammaPrior(1.99, 0.21)

alphas = st.floats(0.05, 50)
betas = st.floats(0.01, 20)
xs = st.integers(0, 10_000)
ts = st.floats(0, 200)
omegas = st.floats(0.01, 100)


class TestBayesEstimate:
    def test_prior_mean_without_data(self):
        assert bayes_estimate(GammaPrior(1, 1), 0, 0) == 1.0

    def test_value(self):
        assert bayes_estimate(AGCELL, 10, 2) == pytest.approx(5.425339366515837, rel=1e-14)

    def test_is_posterior_mean_by_quadrature(self):
        post = posterior_update(AGCELL, 10, 2).as_prior()
        mean, _ = integrate.quad(lambda th: th * gamma_pdf(th, post), 0, np.inf, epsabs=1e-12, limit=200)
        assert abs(mean - bayes_estimate(AGCELL, 10, 2)) < 1e-8


class TestImpactScore:
    def test_new_publication_scores_omega(self):
        assert impact_score(AGCELL, ScoreQuery(0, 0)) == 1.0
        assert impact_score(AGCELL, ScoreQuery(0, 0, omega=3.5)) == pytest.approx(3.5, rel=1e-15)
        assert impact_score(GammaPrior(F(199, 100), F(21, 100)), ScoreQuery(0, 0, F(7, 3))) == F(7, 3)

    @pytest.mark.parametrize(
        "prior,x,t,expected,shown",
        [
            (AGCELL, 10, 2, 0.5725232497328271, 0.57),
            (GammaPrior(1.27, 0.27), 100, 2, 9.484512123209269, 9.48),
            (GammaPrior(1.15, 0.05), 50, 2, 1.0848356309650056, 1.08),
        ],
    )
    def test_grid_cells(self, prior, x, t, expected, shown):
        v = score(prior, x, t)
        assert v == pytest.approx(expected, rel=1e-14)
        assert display_round(v) == shown

    @given(alphas, betas, xs, ts, omegas)
    def test_identity_with_bayes_estimate(self, a, b, x, t, w):
        p = GammaPrior(a, b)
        lhs = score(p, x, t, w) * a / (w * b)
        assert lhs == pytest.approx(bayes_estimate(p, x, t), rel=1e-13)

    @given(alphas, betas, xs, ts, omegas)
    def test_monotone(self, a, b, x, t, w):
        p = GammaPrior(a, b)
        assert score(p, x + 1, t, w) > score(p, x, t, w)
        assert score(p, x, t + 2, w) < score(p, x, t, w)

    @given(alphas, betas, xs, ts, omegas, omegas)
    def test_linear_in_omega(self, a, b, x, t, w1, w2):
        p = GammaPrior(a, b)
        assert score(p, x, t, w2) / score(p, x, t, w1) == pytest.approx(w2 / w1, rel=1e-13)

    @pytest.mark.parametrize("args", [(-1, 0, 1), (0, -1, 1), (0, 0, 0)])
    def test_query_validation(self, args):
        with pytest.raises(DomainError):
            ScoreQuery(*args)


class TestTable:
    def test_shape_and_orientation(self):
        tab = score_table(AGCELL)
        assert tab.values.shape == (4, 11)
        assert tab.t_grid == (2, 4, 6, 8) and tab.x_grid[-1] == 100
        assert tab.values[0, 1] == pytest.approx(score(AGCELL, 10, 2), rel=1e-15)
        assert np.all(np.diff(tab.values, axis=1) > 0)
        assert np.all(np.diff(tab.values, axis=0) < 0)

    def test_single_cell(self):
        tab = score_table(AGCELL, omega=2.5, t_grid=[0], x_grid=[0])
        assert tab.values.tolist() == [[2.5]]

    def test_rounded_display(self):
        assert score_table(AGCELL).rounded()[0][:3] == [0.10, 0.57, 1.05]

    @pytest.mark.parametrize("t_grid,x_grid", [([], [0]), ([2, 2], [0]), ([4, 2], [0]), ([2], [10, 0])])
    def test_bad_grids(self, t_grid, x_grid):
        with pytest.raises(InputError):
            score_table(AGCELL, t_grid=t_grid, x_grid=x_grid)


def test_display_round_half_even():
    assert display_round(0.125) == 0.12
    assert display_round(0.135) == 0.14
    assert display_round(0.0087) == 0.01


class TestDeltas:
    def test_citation_step_value(self):
        assert score_delta_citations(AGCELL, 2) == pytest.approx(0.04775006252984379, rel=1e-14)

    def test_citation_step_independent_of_x(self):
        d = score_delta_citations(AGCELL, 2)
        for x in range(101):
            diff = score(AGCELL, x + 1, 2) - score(AGCELL, x, 2)
            assert abs(diff - d) <= 8 * np.spacing(score(AGCELL, x + 1, 2))

    def test_time_step_agcell(self):
        d = score_delta_time(AGCELL, 10, 2)
        assert d < 0
        assert d == pytest.approx(score(AGCELL, 10, 4) - score(AGCELL, 10, 2), rel=1e-13)
        assert display_round(score(AGCELL, 10, 4)) == 0.30

    def test_time_step_from_zero(self):
        assert score_delta_time(AGCELL, 0, 0) == pytest.approx(score(AGCELL, 0, 2) - 1.0, rel=1e-13)

    def test_time_step_shrinks(self, priors):
        for p in priors.values():
            mags = [abs(score_delta_time(p, 10, t)) for t in (2, 4, 6, 8)]
            assert mags == sorted(mags, reverse=True)

    @given(st.fractions(F(1, 100), 50), st.fractions(F(1, 100), 20), xs,
           st.integers(0, 100), st.fractions(F(1, 10), 10))
    def test_exact_in_rationals(self, a, b, x, t, w):
        p = GammaPrior(a, b)
        assert score(p, x + 1, t, w) - score(p, x, t, w) == score_delta_citations(p, t, w)
        assert score(p, x, t + 2, w) - score(p, x, t, w) == score_delta_time(p, x, t, w)
        assert score(p, x + 2, t, w) - 2 * score(p, x + 1, t, w) + score(p, x, t, w) == 0
        assert score(p, x, t + 4, w) - 2 * score(p, x, t + 2, w) + score(p, x, t, w) > 0


class TestCredibility:
    def test_weight(self):
        assert credibility_weight(0.21, 0) == 0
        assert credibility_weight(0.21, 2) == pytest.approx(0.9049773755656109, rel=1e-15)
        ws = [credibility_weight(0.21, t) for t in range(0, 101, 2)]
        assert all(b > a for a, b in zip(ws, ws[1:])) and ws[-1] < 1

    def test_weight_domain(self):
        with pytest.raises(DomainError):
            credibility_weight(0, 1)

    def test_no_data_all_prior(self):
        d = credibility_decomposition(AGCELL, None, 0, 0, omega=1.7)
        assert d.gamma == 0 and d.sample_mean_term == 0
        assert d.score == pytest.approx(1.7, rel=1e-15)

    def test_agcell_cell(self):
        d = credibility_decomposition(AGCELL, 5.0, 10, 2)
        assert d.gamma == pytest.approx(0.9049773755656109, rel=1e-15)
        assert d.score == pytest.approx(0.5725232497328271, rel=1e-14)
        assert d.sample_mean_term + d.prior_mean_term == d.score

    def test_sample_mean_equal_to_prior_mean(self):
        # x / t == alpha / beta: weight is irrelevant
        p = GammaPrior(2, F(1, 2))
        for t in (1, 2, 10):
            d = credibility_decomposition(p, None, 4 * t, t, omega=3)
            assert d.score == 3

    def test_inconsistent_inputs(self):
        with pytest.raises(InputError):
            credibility_decomposition(AGCELL, 4.0, 10, 2)
        with pytest.raises(InputError):
            credibility_decomposition(AGCELL, None, 3, 0)

    @given(alphas, betas, xs, st.floats(1e-3, 200), omegas)
    def test_equals_score_to_machine_precision(self, a, b, x, t, w):
        p = GammaPrior(a, b)
        d = credibility_decomposition(p, x / t, x, t, w)
        assert ulps_close(d.score, score(p, x, t, w), k=16)

    @given(st.fractions(F(1, 100), 50), st.fractions(F(1, 100), 20), xs,
           st.fractions(F(1, 10), 100), st.fractions(F(1, 10), 10))
    def test_exact_in_rationals(self, a, b, x, t, w):
        p = GammaPrior(a, b)
        assert credibility_decomposition(p, F(x) / t, x, t, w).score == score(p, x, t, w)
