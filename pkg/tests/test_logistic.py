import numpy as np
import pytest
from scipy.special import expit

from stats.logistic import (
    VIF_CAP, SeparationWarning, SingularMatrixError, classification_table, diagnostics, fit_logistic,
    has_separating_direction, nagelkerke_r2, variance_inflation, wald_chi2,
)
from stats.sample import Sample, with_intercept


def simulated(n, beta, seed=0):
    rng = np.random.default_rng(seed)
    X = rng.normal(size=(n, len(beta) - 1))
    p = expit(with_intercept(X) @ np.asarray(beta))
    y = (rng.random(n) < p).astype(float)
    return Sample(X, y)


def test_irls_solves_score_equations():
    sample = simulated(500, [0.3, 1.2, -0.7], seed=3)
    model = fit_logistic(sample)
    assert model.converged
    X = with_intercept(sample.X)
    residual = X.T @ (sample.y - model.predict_proba(sample.X))
    assert np.linalg.norm(residual) <= 1e-6


def test_irls_recovers_coefficients():
    truth = np.array([-0.5, 1.0, -1.5, 0.8])
    model = fit_logistic(simulated(10_000, truth, seed=42))
    assert model.beta == pytest.approx(truth, rel=0.05)


def test_intercept_only_fit_is_the_log_odds():
    y = np.array([1] * 30 + [0] * 70)
    model = fit_logistic(Sample(np.zeros((100, 0)), y))
    assert model.converged
    assert model.beta[0] == pytest.approx(np.log(0.3 / 0.7), abs=1e-8)


def test_fitted_mean_matches_observed_rate():
    sample = simulated(800, [0.4, -0.9, 0.5], seed=8)
    model = fit_logistic(sample)
    assert model.predict_proba(sample.X).mean() == pytest.approx(sample.y.mean(), abs=1e-8)


def test_wald_example():
    assert wald_chi2(1.8976, 0.030011) == pytest.approx(3998.1, abs=1.0)


def test_diagnostics_shapes_and_signs():
    sample = simulated(2000, [0.0, 1.0, 0.0], seed=5)
    model = fit_logistic(sample)
    d = diagnostics(model, sample)
    assert d.names == ["(intercept)", "x0", "x1"]
    assert d.odds_ratios[1] > 1.0
    assert d.p_values[1] < 1e-6
    assert d.p_values[2] > 1e-3
    assert 0.0 < d.nagelkerke_r2 < 1.0
    assert d.log_likelihood > d.null_log_likelihood
    assert all(v == pytest.approx(1.0, abs=0.1) for v in d.vif)
    assert d.wald_chi2[1] == pytest.approx((d.beta[1] / d.se[1]) ** 2)


def test_separation_is_reported():
    X = np.array([[-30.0], [-20.0], [-10.0], [10.0], [20.0], [30.0]])
    sample = Sample(X, [0, 0, 0, 1, 1, 1])
    with pytest.warns(SeparationWarning):
        model = fit_logistic(sample)
    assert not model.converged
    assert model.separated
    with pytest.raises(ValueError):
        diagnostics(model, sample)


def test_quasi_complete_separation_is_reported():
    X = np.array([[0.0], [0.0], [1.0], [1.0], [2.0], [2.0]])
    sample = Sample(X, [0, 0, 0, 1, 1, 1])
    with pytest.warns(SeparationWarning):
        model = fit_logistic(sample)
    assert not model.converged
    assert model.separated
    with pytest.raises(ValueError):
        diagnostics(model, sample)


def test_separating_direction_check():
    quasi = with_intercept(np.array([[0.0], [0.0], [1.0], [1.0], [2.0], [2.0]]))
    assert has_separating_direction(quasi, np.array([0, 0, 0, 1, 1, 1]))
    overlapping = with_intercept(np.array([[0.0], [1.0], [2.0], [3.0]]))
    assert not has_separating_direction(overlapping, np.array([0, 1, 0, 1]))


def test_collinear_columns_raise():
    rng = np.random.default_rng(1)
    a = rng.normal(size=50)
    X = np.column_stack([a, 2 * a])
    with pytest.raises(SingularMatrixError) as err:
        fit_logistic(Sample(X, rng.integers(0, 2, 50), ["a", "twice_a"]))
    assert err.value.columns == ["twice_a"]


def test_single_class_rejected():
    with pytest.raises(ValueError):
        fit_logistic(Sample(np.ones((4, 1)), [1, 1, 1, 1]))


def test_vif_caps_perfect_collinearity():
    rng = np.random.default_rng(2)
    a, b = rng.normal(size=100), rng.normal(size=100)
    vifs, capped = variance_inflation(np.column_stack([a, b, a + b]))
    assert capped == [True, True, True]
    assert vifs == [VIF_CAP] * 3


def test_nagelkerke_bounds():
    assert nagelkerke_r2(-100.0, -100.0, 200) == pytest.approx(0.0)
    assert 0.0 < nagelkerke_r2(-50.0, -100.0, 200) <= 1.0


def test_classification_table_counts_training_rows():
    sample = simulated(400, [0.0, 2.0], seed=11)
    model = fit_logistic(sample)
    table = classification_table(model, sample)
    assert table.n == 400
    predicted = model.predict(sample.X)
    assert table.tp == int(((predicted == 1) & (sample.y == 1)).sum())
    assert table.tn == int(((predicted == 0) & (sample.y == 0)).sum())
    assert table.accuracy > 0.6
