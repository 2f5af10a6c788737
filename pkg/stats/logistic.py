"""Binary logistic regression by IRLS, with inferential diagnostics."""

import logging
import math
import warnings
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np
from scipy import stats as sps
from scipy.optimize import linprog
from scipy.special import expit

from config.settings import LOGISTIC_CONFIG
from evalm.metrics import confusion
from stats.sample import Sample, with_intercept

logger = logging.getLogger(__name__)

INTERCEPT = "(intercept)"
VIF_CAP = 1e10  # reported in place of an infinite VIF
SATURATION = 1e-6  # fitted probability this close to 0 or 1 triggers the separation check


class SingularMatrixError(ValueError):
    """The information matrix cannot be inverted."""

    def __init__(self, columns: List[str]):
        super().__init__(f"Singular information matrix; collinear columns: {columns}")
        self.columns = columns


class SeparationWarning(UserWarning):
    """The classes are completely or quasi-completely separated; the MLE does not exist."""


@dataclass
class LogisticModel:
    beta: np.ndarray                  # intercept first
    converged: bool
    n_iter: int
    feature_names: List[str] = field(default_factory=list)
    log_likelihood: float = float("nan")
    separated: bool = False

    def decision_function(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        if X.ndim == 1:
            X = X.reshape(1, -1)
        return with_intercept(X) @ self.beta

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        """Fitted probability of the positive (female) class."""
        return expit(self.decision_function(X))

    def predict(self, X: np.ndarray, threshold: float = 0.5) -> np.ndarray:
        return (self.predict_proba(X) >= threshold).astype(int)


@dataclass
class Diagnostics:
    names: List[str]                  # intercept first
    beta: List[float]
    se: List[float]
    wald_chi2: List[float]
    df: List[int]
    p_values: List[float]
    odds_ratios: List[float]
    nagelkerke_r2: float
    log_likelihood: float
    null_log_likelihood: float
    vif: List[float]                  # one per feature, intercept excluded
    vif_capped: List[bool]

    def rows(self) -> List[dict]:
        return [
            {
                "name": name, "beta": b, "se": se, "wald_chi2": w, "df": df,
                "p": p, "odds_ratio": o,
            }
            for name, b, se, w, df, p, o in zip(
                self.names, self.beta, self.se, self.wald_chi2, self.df, self.p_values, self.odds_ratios)
        ]

    def to_dict(self) -> dict:
        return {
            "coefficients": self.rows(),
            "nagelkerke_r2": self.nagelkerke_r2,
            "log_likelihood": self.log_likelihood,
            "null_log_likelihood": self.null_log_likelihood,
            "vif": dict(zip(self.names[1:], self.vif)),
            "vif_capped": dict(zip(self.names[1:], self.vif_capped)),
        }


def _log_likelihood(X: np.ndarray, y: np.ndarray, beta: np.ndarray) -> float:
    eta = X @ beta
    return float(np.sum(y * eta - np.logaddexp(0.0, eta)))


def has_separating_direction(X: np.ndarray, y: np.ndarray) -> bool:
    """True if some b != 0 has x_i.b >= 0 for every positive row and <= 0 for every negative row.

    Such a direction exists exactly when the classes are completely or
    quasi-completely separated, and the log-likelihood then keeps rising along it.
    X must include the intercept column.
    """
    signed = np.where(y > 0.5, 1.0, -1.0)[:, None] * X
    result = linprog(
        c=-signed.sum(axis=0), A_ub=-signed, b_ub=np.zeros(len(signed)),
        bounds=[(-1.0, 1.0)] * X.shape[1], method="highs",
    )
    if result.status != 0:
        return False
    return -result.fun > 1e-9 * (1.0 + float(np.abs(signed).sum()))


def _collinear_columns(X: np.ndarray, names: List[str]) -> List[str]:
    basis: List[int] = []
    collinear = []
    for j in range(X.shape[1]):
        if np.linalg.matrix_rank(X[:, basis + [j]]) == len(basis) + 1:
            basis.append(j)
        else:
            collinear.append(names[j])
    return collinear


def fit_logistic(sample: Sample, tol: float = LOGISTIC_CONFIG["tol"],
                 max_iter: int = LOGISTIC_CONFIG["max_iter"]) -> LogisticModel:
    """Maximize the binomial log-likelihood by IRLS with step halving.

    Complete or quasi-complete separation returns a model with
    ``converged=False`` and ``separated=True`` and emits a ``SeparationWarning``.
    Quasi-complete separation is confirmed by a linear program once some fitted
    probability saturates or the iteration limit is hit.

    Raises:
        ValueError: With fewer than 2 rows or a single class
        SingularMatrixError: If design columns are linearly dependent
    """
    if len(sample) < 2 or not sample.has_both_classes:
        raise ValueError("Logistic regression needs at least 2 rows and both classes")

    X = with_intercept(sample.X)
    y = sample.y
    names = [INTERCEPT] + list(sample.feature_names)
    if np.linalg.matrix_rank(X) < X.shape[1]:
        raise SingularMatrixError(_collinear_columns(X, names))

    beta = np.zeros(X.shape[1])
    ll = _log_likelihood(X, y, beta)
    converged = separated = False
    n_iter = 0

    for n_iter in range(1, max_iter + 1):
        p = expit(X @ beta)
        gradient = X.T @ (y - p)
        if np.linalg.norm(gradient) <= tol:
            converged = True
            break
        if np.all(np.abs(y - p) < 1e-8):
            separated = True
            break

        W = np.clip(p * (1.0 - p), 1e-12, None)
        info = (X.T * W) @ X
        try:
            step = np.linalg.solve(info, gradient)
        except np.linalg.LinAlgError as e:
            raise SingularMatrixError(_collinear_columns(X, names)) from e

        # Step halving keeps the log-likelihood from decreasing
        scale = 1.0
        while True:
            candidate = beta + scale * step
            ll_new = _log_likelihood(X, y, candidate)
            if ll_new >= ll - 1e-12 or scale < 1e-10:
                break
            scale /= 2.0

        stalled = abs(ll_new - ll) < 1e-14 * (1.0 + abs(ll)) and np.linalg.norm(scale * step) < 1e-12
        beta, ll = candidate, ll_new
        if stalled:
            # numerical floor reached before the gradient tolerance
            converged = True
            break

    if not separated:
        p = expit(X @ beta)
        saturated = bool(np.any(np.minimum(p, 1.0 - p) < SATURATION))
        if (saturated or not converged) and has_separating_direction(X, y):
            separated = True
            converged = False

    if separated:
        warnings.warn("Separation: coefficients diverge, model not converged", SeparationWarning)
        logger.warning("Separation detected after %d iterations", n_iter)
    elif not converged:
        logger.warning("IRLS did not converge in %d iterations", max_iter)
    else:
        logger.debug("IRLS converged in %d iterations, log-likelihood %.6f", n_iter, ll)

    return LogisticModel(
        beta=beta, converged=converged, n_iter=n_iter,
        feature_names=list(sample.feature_names), log_likelihood=ll, separated=separated,
    )


def wald_chi2(beta: float, se: float) -> float:
    return (beta / se) ** 2


def variance_inflation(X: np.ndarray) -> Tuple[List[float], List[bool]]:
    """VIF_j = 1 / (1 - R²_j) from regressing column j on the others.

    Perfectly collinear columns report ``VIF_CAP`` with the capped flag set.
    """
    X = np.asarray(X, dtype=float)
    n, k = X.shape
    vifs, capped = [], []
    for j in range(k):
        target = X[:, j]
        others = with_intercept(np.delete(X, j, axis=1))
        coef, *_ = np.linalg.lstsq(others, target, rcond=None)
        residual = target - others @ coef
        ss_tot = float(np.sum((target - target.mean()) ** 2))
        ss_res = float(residual @ residual)
        r2 = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
        if r2 >= 1.0 - 1e-12:
            vifs.append(VIF_CAP)
            capped.append(True)
        else:
            vifs.append(1.0 / (1.0 - r2))
            capped.append(False)
    return vifs, capped


def nagelkerke_r2(ll_model: float, ll_null: float, n: int) -> float:
    """(1 - (L0/L1)^(2/N)) / (1 - L0^(2/N)), computed in log space."""
    cox_snell = 1.0 - math.exp(2.0 / n * (ll_null - ll_model))
    maximum = 1.0 - math.exp(2.0 / n * ll_null)
    if maximum <= 0.0:
        return 0.0
    return min(max(cox_snell / maximum, 0.0), 1.0)


def diagnostics(model: LogisticModel, sample: Sample) -> Diagnostics:
    """Standard errors, Wald tests, odds ratios, Nagelkerke R² and VIFs.

    Raises:
        ValueError: If the model did not converge
    """
    if not model.converged:
        raise ValueError("Diagnostics need a converged model")

    X = with_intercept(sample.X)
    y = sample.y
    p = expit(X @ model.beta)
    info = (X.T * (p * (1.0 - p))) @ X
    try:
        cov = np.linalg.inv(info)
    except np.linalg.LinAlgError as e:
        raise SingularMatrixError(_collinear_columns(X, [INTERCEPT] + list(sample.feature_names))) from e

    se = np.sqrt(np.diag(cov))
    wald = (model.beta / se) ** 2
    p_values = sps.chi2.sf(wald, df=1)

    n = len(y)
    ybar = float(y.mean())
    ll_null = float(n * (ybar * math.log(ybar) + (1.0 - ybar) * math.log(1.0 - ybar)))
    ll_model = _log_likelihood(X, y, model.beta)

    if sample.X.shape[1] > 0:
        vif, vif_capped = variance_inflation(sample.X)
    else:
        vif, vif_capped = [], []
    if any(vif_capped):
        logger.warning("Perfectly collinear predictors: VIF capped at %g", VIF_CAP)

    return Diagnostics(
        names=[INTERCEPT] + list(sample.feature_names),
        beta=model.beta.tolist(),
        se=se.tolist(),
        wald_chi2=wald.tolist(),
        df=[1] * len(model.beta),
        p_values=p_values.tolist(),
        odds_ratios=np.exp(model.beta).tolist(),
        nagelkerke_r2=nagelkerke_r2(ll_model, ll_null, n),
        log_likelihood=ll_model,
        null_log_likelihood=ll_null,
        vif=vif,
        vif_capped=vif_capped,
    )


def classification_table(model: LogisticModel, sample: Sample, threshold: float = 0.5):
    """Observed vs. predicted counts on the training data."""
    return confusion(sample.y.astype(int), model.predict(sample.X, threshold))
