"""Numerical core: logistic regression, RBF-SVM, model selection, tests."""

from .sample import Sample
from .logistic import (
    Diagnostics, LogisticModel, SeparationWarning, SingularMatrixError,
    classification_table, diagnostics, fit_logistic, has_separating_direction, variance_inflation, wald_chi2,
)
from .svm import SvmModel, fit_svm_rbf, svm_decision, svm_predict_proba
from .selection import CvResult, GridSearchResult, LogisticSpec, SvmSpec, cross_validate, grid_search, make_grid
from .hypothesis import TTestResult, paired_ttest

__all__ = [
    'Sample', 'Diagnostics', 'LogisticModel', 'SeparationWarning', 'SingularMatrixError',
    'classification_table', 'diagnostics', 'fit_logistic', 'has_separating_direction', 'variance_inflation',
    'wald_chi2',
    'SvmModel', 'fit_svm_rbf', 'svm_decision', 'svm_predict_proba',
    'CvResult', 'GridSearchResult', 'LogisticSpec', 'SvmSpec', 'cross_validate', 'grid_search', 'make_grid',
    'TTestResult', 'paired_ttest',
]
