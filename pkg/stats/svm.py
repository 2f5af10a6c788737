"""RBF-kernel SVM trained by sequential minimal optimization.

The solver follows the usual two-variable scheme on the dual: pick the
maximal violating pair (i from I_up, j from I_low), solve the two-variable
subproblem analytically, clip to the box [0, C], update the gradient. It
stops when the violation m(α) - M(α) falls below ``tol``. Kernel rows are
computed on demand and kept in a small LRU cache, so memory stays linear in
the number of training points.
"""

import logging
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from sklearn.metrics.pairwise import rbf_kernel
from sklearn.model_selection import train_test_split

from config.settings import SVM_CONFIG
from stats.platt import fit_platt, platt_probability
from stats.sample import Sample

logger = logging.getLogger(__name__)


@dataclass
class SvmModel:
    support_vectors: np.ndarray
    dual_coef: np.ndarray           # α_i · y_i, y in {-1, +1}
    bias: float
    gamma: float
    cost: float
    platt_a: Optional[float] = None
    platt_b: Optional[float] = None
    feature_names: List[str] = field(default_factory=list)
    support_indices: List[int] = field(default_factory=list)
    n_iter: int = 0
    kkt_gap: float = 0.0

    @property
    def has_probability(self) -> bool:
        return self.platt_a is not None

    def decision_function(self, X: np.ndarray) -> np.ndarray:
        return svm_decision(self, X)

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        return svm_predict_proba(self, X)

    def predict(self, X: np.ndarray) -> np.ndarray:
        return (svm_decision(self, X) >= 0.0).astype(int)


@dataclass
class _SmoResult:
    alpha: np.ndarray
    bias: float
    n_iter: int
    gap: float


class _KernelRows:
    """On-demand RBF kernel rows with LRU eviction."""

    def __init__(self, X: np.ndarray, gamma: float, capacity: int):
        self.X = X
        self.gamma = gamma
        self.capacity = max(capacity, 2)
        self._rows: "OrderedDict[int, np.ndarray]" = OrderedDict()

    def __getitem__(self, i: int) -> np.ndarray:
        row = self._rows.get(i)
        if row is not None:
            self._rows.move_to_end(i)
            return row
        row = rbf_kernel(self.X[i:i + 1], self.X, gamma=self.gamma)[0]
        self._rows[i] = row
        if len(self._rows) > self.capacity:
            self._rows.popitem(last=False)
        return row


def _bias(alpha: np.ndarray, y: np.ndarray, G: np.ndarray, cost: float) -> float:
    yG = y * G
    at_upper = alpha >= cost
    at_lower = alpha <= 0.0
    free = ~(at_upper | at_lower)
    if np.any(free):
        rho = float(yG[free].mean())
    else:
        ub_mask = (at_upper & (y < 0)) | (at_lower & (y > 0))
        lb_mask = (at_upper & (y > 0)) | (at_lower & (y < 0))
        ub = float(yG[ub_mask].min()) if np.any(ub_mask) else np.inf
        lb = float(yG[lb_mask].max()) if np.any(lb_mask) else -np.inf
        rho = (ub + lb) / 2.0
    return -rho


def _solve_smo(X: np.ndarray, y: np.ndarray, gamma: float, cost: float, tol: float,
               max_iter: int, cache_rows: int) -> _SmoResult:
    n = y.shape[0]
    alpha = np.zeros(n)
    G = -np.ones(n)                  # gradient of ½αᵀQα - eᵀα
    rows = _KernelRows(X, gamma, cache_rows)
    gap = np.inf
    n_iter = 0

    for n_iter in range(1, max_iter + 1):
        minus_yG = -y * G
        up = ((y > 0) & (alpha < cost)) | ((y < 0) & (alpha > 0))
        low = ((y > 0) & (alpha > 0)) | ((y < 0) & (alpha < cost))
        if not up.any() or not low.any():
            gap = 0.0
            break
        i = int(np.argmax(np.where(up, minus_yG, -np.inf)))
        j = int(np.argmin(np.where(low, minus_yG, np.inf)))
        gap = float(minus_yG[i] - minus_yG[j])
        if gap < tol:
            break

        Ki, Kj = rows[i], rows[j]
        quad = max(Ki[i] + Kj[j] - 2.0 * Ki[j], 1e-12)
        old_i, old_j = alpha[i], alpha[j]
        ai, aj = old_i, old_j

        if y[i] != y[j]:
            delta = (-G[i] - G[j]) / quad
            diff = ai - aj
            ai += delta
            aj += delta
            if diff > 0:
                if aj < 0:
                    aj, ai = 0.0, diff
            elif ai < 0:
                ai, aj = 0.0, -diff
            if diff > 0:
                if ai > cost:
                    ai, aj = cost, cost - diff
            elif aj > cost:
                aj, ai = cost, cost + diff
        else:
            delta = (G[i] - G[j]) / quad
            total = ai + aj
            ai -= delta
            aj += delta
            if total > cost:
                if ai > cost:
                    ai, aj = cost, total - cost
            elif aj < 0:
                aj, ai = 0.0, total
            if total > cost:
                if aj > cost:
                    aj, ai = cost, total - cost
            elif ai < 0:
                ai, aj = 0.0, total

        alpha[i], alpha[j] = ai, aj
        G += y * (y[i] * Ki * (ai - old_i) + y[j] * Kj * (aj - old_j))
    else:
        logger.warning("SMO hit the iteration cap (%d) with violation %.3g", max_iter, gap)

    return _SmoResult(alpha=alpha, bias=_bias(alpha, y, G, cost), n_iter=n_iter, gap=gap)


def _train(X: np.ndarray, y01: np.ndarray, gamma: float, cost: float, tol: float,
           max_iter: Optional[int]) -> Tuple[_SmoResult, np.ndarray]:
    y = np.where(y01 > 0, 1.0, -1.0)
    limit = max_iter or max(SVM_CONFIG["max_iter"], 100 * len(y))
    return _solve_smo(X, y, gamma, cost, tol, limit, SVM_CONFIG["kernel_cache_rows"]), y


def _decision(X_train: np.ndarray, coef: np.ndarray, bias: float, gamma: float, X: np.ndarray) -> np.ndarray:
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X.reshape(1, -1)
    if coef.shape[0] == 0:
        return np.full(X.shape[0], bias)
    return rbf_kernel(X, X_train, gamma=gamma) @ coef + bias


def _platt_from_holdout(sample: Sample, gamma: float, cost: float, tol: float,
                        max_iter: Optional[int], holdout: float, seed: int) -> Optional[Tuple[float, float]]:
    try:
        train_idx, test_idx = train_test_split(
            np.arange(len(sample)), test_size=holdout, stratify=sample.y, random_state=seed)
    except ValueError:
        return None
    if len(np.unique(sample.y[train_idx])) < 2:
        return None
    X_train = sample.X[train_idx]
    smo, y = _train(X_train, sample.y[train_idx], gamma, cost, tol, max_iter)
    values = _decision(X_train, smo.alpha * y, smo.bias, gamma, sample.X[test_idx])
    return fit_platt(values, sample.y[test_idx])


def fit_svm_rbf(sample: Sample, gamma: float, cost: float, tol: float = SVM_CONFIG["tol"],
                probability: bool = True, seed: int = 0, max_iter: Optional[int] = None,
                holdout: float = SVM_CONFIG["platt_holdout"]) -> SvmModel:
    """Train a C-SVM with K(x, z) = exp(-gamma·‖x - z‖²).

    With ``probability`` set, a Platt sigmoid is fitted on the decision values
    of a stratified holdout (its own SVM trained on the rest); samples too
    small to split fall back to the final model's in-sample decision values.

    Raises:
        ValueError: On a single-class sample or non-positive gamma/cost
    """
    if gamma <= 0 or cost <= 0:
        raise ValueError(f"gamma and cost must be positive, got gamma={gamma}, cost={cost}")
    if not sample.has_both_classes:
        raise ValueError("SVM training needs both classes")

    smo, y = _train(sample.X, sample.y, gamma, cost, tol, max_iter)
    support = np.flatnonzero(smo.alpha > 0)
    model = SvmModel(
        support_vectors=sample.X[support].copy(),
        dual_coef=(smo.alpha * y)[support],
        bias=smo.bias,
        gamma=float(gamma),
        cost=float(cost),
        feature_names=list(sample.feature_names),
        support_indices=support.tolist(),
        n_iter=smo.n_iter,
        kkt_gap=smo.gap,
    )
    logger.debug("SMO: %d support vectors of %d after %d iterations", len(support), len(sample), smo.n_iter)

    if probability:
        params = _platt_from_holdout(sample, gamma, cost, tol, max_iter, holdout, seed)
        if params is None:
            logger.info("Sample too small for a Platt holdout; fitting on training decision values")
            params = fit_platt(svm_decision(model, sample.X), sample.y)
        model.platt_a, model.platt_b = params
    return model


def svm_decision(model: SvmModel, X: np.ndarray) -> np.ndarray:
    """Signed decision values; positive means class 1 (female)."""
    return _decision(model.support_vectors, model.dual_coef, model.bias, model.gamma, X)


def svm_predict_proba(model: SvmModel, X: np.ndarray) -> np.ndarray:
    """Platt probability of class 1.

    Raises:
        ValueError: If the model was trained without probability outputs
    """
    if not model.has_probability:
        raise ValueError("Model has no Platt parameters; train with probability=True")
    return platt_probability(svm_decision(model, X), model.platt_a, model.platt_b)
