"""Binary classification metrics with female as the positive class."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence

import numpy as np
from sklearn.metrics import confusion_matrix, roc_auc_score

from corpus.entries import Gender

logger = logging.getLogger(__name__)

FEMALE = 1
MALE = 0


def _as_label(value: Any) -> int:
    if isinstance(value, Gender):
        return FEMALE if value is Gender.FEMALE else MALE
    if isinstance(value, str):
        lowered = value.lower()
        if lowered == Gender.FEMALE.value:
            return FEMALE
        if lowered == Gender.MALE.value:
            return MALE
        raise ValueError(f"Unknown gender label: {value!r}")
    label = int(value)
    if label not in (MALE, FEMALE):
        raise ValueError(f"Labels must be 0 (male) or 1 (female), got {value!r}")
    return label


def as_labels(values: Sequence[Any]) -> np.ndarray:
    """Map Gender values, 'male'/'female' strings or 0/1 to 0/1 (1 = female)."""
    return np.array([_as_label(v) for v in values], dtype=int)


@dataclass(frozen=True)
class ConfusionTable:
    tp: int   # female predicted female
    fp: int   # male predicted female
    tn: int   # male predicted male
    fn: int   # female predicted male

    @property
    def n(self) -> int:
        return self.tp + self.fp + self.tn + self.fn

    @property
    def accuracy(self) -> float:
        return (self.tp + self.tn) / self.n if self.n else 0.0

    def to_dict(self) -> Dict[str, int]:
        return {"tp": self.tp, "fp": self.fp, "tn": self.tn, "fn": self.fn}


def confusion(truth: Sequence[Any], pred: Sequence[Any]) -> ConfusionTable:
    """Count agreement between true and predicted genders.

    Raises:
        ValueError: On length mismatch or empty input
    """
    truth = as_labels(truth)
    pred = as_labels(pred)
    if truth.shape[0] != pred.shape[0]:
        raise ValueError(f"truth has {truth.shape[0]} labels but pred has {pred.shape[0]}")
    if truth.shape[0] == 0:
        raise ValueError("Cannot build a confusion table from no labels")
    tn, fp, fn, tp = confusion_matrix(truth, pred, labels=[MALE, FEMALE]).ravel()
    return ConfusionTable(tp=int(tp), fp=int(fp), tn=int(tn), fn=int(fn))


def _ratio(num: int, den: int) -> Optional[float]:
    return num / den if den else None


@dataclass(frozen=True)
class Metrics:
    """Rates derived from a confusion table; None where a denominator is zero.

    ``fpr``/``fnr`` use the textbook denominators. ``fpr_share``/``fnr_share``
    are the share of wrong answers among all female/male predictions, which
    is how some published tables report them.
    """
    n: int
    acc: Optional[float]
    rec: Optional[float]           # sensitivity for female
    specificity: Optional[float]
    precision: Optional[float]
    fpr: Optional[float]           # fp / (fp + tn)
    fnr: Optional[float]           # fn / (fn + tp)
    fpr_share: Optional[float]     # fp / (fp + tp)
    fnr_share: Optional[float]     # fn / (fn + tn)

    def to_dict(self) -> Dict[str, Optional[float]]:
        return {
            "n": self.n,
            "acc": self.acc,
            "rec": self.rec,
            "specificity": self.specificity,
            "precision": self.precision,
            "fpr": self.fpr,
            "fnr": self.fnr,
            "fpr_share": self.fpr_share,
            "fnr_share": self.fnr_share,
        }


def metrics(ct: ConfusionTable) -> Metrics:
    return Metrics(
        n=ct.n,
        acc=_ratio(ct.tp + ct.tn, ct.n),
        rec=_ratio(ct.tp, ct.tp + ct.fn),
        specificity=_ratio(ct.tn, ct.tn + ct.fp),
        precision=_ratio(ct.tp, ct.tp + ct.fp),
        fpr=_ratio(ct.fp, ct.fp + ct.tn),
        fnr=_ratio(ct.fn, ct.fn + ct.tp),
        fpr_share=_ratio(ct.fp, ct.fp + ct.tp),
        fnr_share=_ratio(ct.fn, ct.fn + ct.tn),
    )


def kappa(ct: ConfusionTable) -> float:
    """Cohen's kappa; 0.0 when chance agreement is already perfect."""
    n = ct.n
    if n == 0:
        raise ValueError("Kappa needs at least one observation")
    p_o = (ct.tp + ct.tn) / n
    pred_female = (ct.tp + ct.fp) / n
    true_female = (ct.tp + ct.fn) / n
    p_e = pred_female * true_female + (1.0 - pred_female) * (1.0 - true_female)
    if p_e >= 1.0:
        logger.warning("Chance agreement is 1; kappa reported as 0")
        return 0.0
    return (p_o - p_e) / (1.0 - p_e)


def auc(scores: Sequence[float], truth: Sequence[Any]) -> float:
    """Area under the ROC curve with male as the positive class.

    Gender scores run from -1 (female) to +1 (male), so a higher score should
    rank a male above a female. Ties count one half.

    Raises:
        ValueError: If only one gender is present
    """
    labels = as_labels(truth)
    scores = np.asarray(scores, dtype=float)
    if scores.shape[0] != labels.shape[0]:
        raise ValueError(f"{scores.shape[0]} scores for {labels.shape[0]} labels")
    if np.unique(labels).shape[0] < 2:
        raise ValueError("AUC needs both genders in the truth labels")
    return float(roc_auc_score(labels == MALE, scores))
