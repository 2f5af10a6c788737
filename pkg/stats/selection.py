"""Repeated stratified cross-validation and (gamma, cost) grid search."""

import logging
from dataclasses import dataclass, field, replace
from typing import Any, List, Protocol, Sequence, Tuple

import numpy as np
from joblib import Parallel, delayed
from sklearn.model_selection import RepeatedStratifiedKFold

from config.settings import LOGISTIC_CONFIG, SVM_CONFIG
from evalm.metrics import confusion, kappa
from stats.logistic import fit_logistic
from stats.sample import Sample
from stats.svm import fit_svm_rbf

logger = logging.getLogger(__name__)


class ModelSpec(Protocol):
    """Anything that can fit a sample and predict 0/1 labels."""

    def fit(self, sample: Sample) -> Any: ...

    def predict(self, model: Any, X: np.ndarray) -> np.ndarray: ...


@dataclass(frozen=True)
class LogisticSpec:
    tol: float = LOGISTIC_CONFIG["tol"]
    max_iter: int = LOGISTIC_CONFIG["max_iter"]
    threshold: float = 0.5

    def fit(self, sample: Sample):
        return fit_logistic(sample, tol=self.tol, max_iter=self.max_iter)

    def predict(self, model, X: np.ndarray) -> np.ndarray:
        return model.predict(X, self.threshold)


@dataclass(frozen=True)
class SvmSpec:
    gamma: float
    cost: float
    tol: float = SVM_CONFIG["tol"]
    probability: bool = False
    seed: int = 0

    def fit(self, sample: Sample):
        return fit_svm_rbf(sample, self.gamma, self.cost, tol=self.tol,
                           probability=self.probability, seed=self.seed)

    def predict(self, model, X: np.ndarray) -> np.ndarray:
        return model.predict(X)


@dataclass
class CvResult:
    folds: int
    repeats: int
    accuracy_mean: float
    accuracy_sd: float
    kappa_mean: float
    kappa_sd: float
    scores: List[Tuple[float, float]] = field(default_factory=list)  # (accuracy, kappa) in fold order

    def to_dict(self) -> dict:
        return {
            "folds": self.folds,
            "repeats": self.repeats,
            "accuracy_mean": self.accuracy_mean,
            "accuracy_sd": self.accuracy_sd,
            "kappa_mean": self.kappa_mean,
            "kappa_sd": self.kappa_sd,
        }


@dataclass
class GridSearchResult:
    gamma: float
    cost: float
    cv: CvResult
    table: List[Tuple[float, float, CvResult]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "gamma": self.gamma,
            "cost": self.cost,
            "cv": self.cv.to_dict(),
            "grid": [
                {"gamma": g, "cost": c, "accuracy_mean": cv.accuracy_mean, "kappa_mean": cv.kappa_mean}
                for g, c, cv in self.table
            ],
        }


def _score_fold(spec: ModelSpec, sample: Sample, train: np.ndarray, test: np.ndarray) -> Tuple[float, float]:
    model = spec.fit(sample.subset(train))
    predicted = spec.predict(model, sample.X[test])
    table = confusion(sample.y[test].astype(int), predicted)
    return table.accuracy, kappa(table)


def _sd(values: np.ndarray) -> float:
    return float(values.std(ddof=1)) if values.shape[0] > 1 else 0.0


def cross_validate(spec: ModelSpec, sample: Sample, folds: int = 10, repeats: int = 3,
                   seed: int = 0, n_jobs: int = 1) -> CvResult:
    """Stratified k-fold CV repeated with seeded shuffles.

    Folds may run in parallel; scores are always reduced in fold order.

    Raises:
        ValueError: If folds < 2 or the sample has fewer rows than folds
    """
    if folds < 2:
        raise ValueError(f"Need at least 2 folds, got {folds}")
    if len(sample) < folds:
        raise ValueError(f"Cannot split {len(sample)} rows into {folds} folds")

    splitter = RepeatedStratifiedKFold(n_splits=folds, n_repeats=repeats, random_state=seed)
    splits = list(splitter.split(sample.X, sample.y))

    if n_jobs == 1:
        scores = [_score_fold(spec, sample, train, test) for train, test in splits]
    else:
        scores = Parallel(n_jobs=n_jobs)(delayed(_score_fold)(spec, sample, train, test) for train, test in splits)

    accuracy = np.array([s[0] for s in scores])
    kappas = np.array([s[1] for s in scores])
    return CvResult(
        folds=folds,
        repeats=repeats,
        accuracy_mean=float(accuracy.mean()),
        accuracy_sd=_sd(accuracy),
        kappa_mean=float(kappas.mean()),
        kappa_sd=_sd(kappas),
        scores=[(float(a), float(k)) for a, k in scores],
    )


def grid_search(spec: SvmSpec, sample: Sample, grid: Sequence[Tuple[float, float]], folds: int = 10,
                repeats: int = 3, seed: int = 0, n_jobs: int = 1) -> GridSearchResult:
    """Cross-validate every (gamma, cost) point and keep the most accurate.

    Ties go to the smaller cost, then the smaller gamma.

    Raises:
        ValueError: On an empty grid
    """
    if not grid:
        raise ValueError("Grid must contain at least one (gamma, cost) point")

    table = []
    for gamma, cost in grid:
        cv = cross_validate(replace(spec, gamma=gamma, cost=cost), sample, folds, repeats, seed, n_jobs)
        logger.info("Grid gamma=%g cost=%g: accuracy %.4f kappa %.4f", gamma, cost, cv.accuracy_mean, cv.kappa_mean)
        table.append((float(gamma), float(cost), cv))

    gamma, cost, cv = min(table, key=lambda row: (-row[2].accuracy_mean, row[1], row[0]))
    return GridSearchResult(gamma=gamma, cost=cost, cv=cv, table=table)


def make_grid(gammas: Sequence[float], costs: Sequence[float]) -> List[Tuple[float, float]]:
    return [(float(g), float(c)) for g in gammas for c in costs]