"""Evaluation metrics and reports."""

from .metrics import ConfusionTable, Metrics, as_labels, auc, confusion, kappa, metrics
from .report import report

__all__ = ['ConfusionTable', 'Metrics', 'as_labels', 'auc', 'confusion', 'kappa', 'metrics', 'report']
