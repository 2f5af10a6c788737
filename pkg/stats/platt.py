"""Platt scaling: a sigmoid from decision values to class probabilities.

P(y = 1 | f) = 1 / (1 + exp(A·f + B)), fitted on regularized targets
(N+ + 1)/(N+ + 2) and 1/(N- + 2) to avoid overfitting small holdouts.
"""

import logging
from typing import Tuple

import numpy as np
from scipy.optimize import minimize
from scipy.special import expit

logger = logging.getLogger(__name__)


def fit_platt(decision_values: np.ndarray, y: np.ndarray) -> Tuple[float, float]:
    """Fit (A, B) by minimizing the cross-entropy with BFGS.

    Args:
        decision_values: classifier outputs, positive for class 1
        y: labels in {0, 1}
    """
    f = np.asarray(decision_values, dtype=float)
    y = np.asarray(y, dtype=float)
    if f.shape != y.shape:
        raise ValueError("decision values and labels differ in length")

    prior1 = float(np.sum(y > 0))
    prior0 = float(y.shape[0] - prior1)
    T = np.where(y > 0, (prior1 + 1.0) / (prior1 + 2.0), 1.0 / (prior0 + 2.0))

    def objective(theta):
        z = theta[0] * f + theta[1]
        return float(np.sum(np.logaddexp(0.0, z) - (1.0 - T) * z))

    def gradient(theta):
        z = theta[0] * f + theta[1]
        residual = T - (1.0 - expit(z))
        return np.array([residual @ f, residual.sum()])

    start = np.array([0.0, np.log((prior0 + 1.0) / (prior1 + 1.0))])
    result = minimize(objective, start, jac=gradient, method="BFGS")
    if not result.success:
        logger.warning("Platt fit stopped early: %s", result.message)
    A, B = result.x
    return float(A), float(B)


def platt_probability(decision_values: np.ndarray, A: float, B: float) -> np.ndarray:
    return expit(-(A * np.asarray(decision_values, dtype=float) + B))
