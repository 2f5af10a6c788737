"""Evaluation report assembled from stage-wise predictions."""

from typing import Any, Dict, Optional, Sequence

from evalm.metrics import as_labels, auc, confusion, kappa, metrics


def _block(truth: Sequence[Any], pred: Sequence[Any]) -> Optional[Dict[str, Any]]:
    if not truth:
        return None
    ct = confusion(truth, pred)
    return {**metrics(ct).to_dict(), "confusion": ct.to_dict(), "kappa": kappa(ct)}


def report(truth: Sequence[Any], pred: Sequence[Any], stages: Sequence[int],
           scores: Optional[Sequence[float]] = None) -> Dict[str, Any]:
    """Build ``{n, stage1, stage2, overall, auc, kappa}``.

    ``stages`` holds 1 or 2 per user. ``auc`` is computed over ``scores``
    (higher = more male) and is None when they are missing or one gender is
    absent. Stage blocks with no users are None.
    """
    if not (len(truth) == len(pred) == len(stages)):
        raise ValueError("truth, pred and stages must have equal lengths")

    by_stage = {}
    for stage in (1, 2):
        rows = [i for i, s in enumerate(stages) if s == stage]
        by_stage[stage] = _block([truth[i] for i in rows], [pred[i] for i in rows])

    overall = _block(list(truth), list(pred))
    area = None
    if scores is not None and len(set(as_labels(truth).tolist())) > 1:
        area = auc(scores, truth)

    return {
        "n": len(truth),
        "stage1": by_stage[1],
        "stage2": by_stage[2],
        "overall": overall,
        "auc": area,
        "kappa": overall["kappa"] if overall else None,
    }
