"""Onomastic and Bouba/Kiki name characteristics."""

from .features import (
    FINAL_PREDICTORS, FULL_PREDICTORS, TABLE_PREDICTORS,
    NameFeatures, count_syllables, extract, feature_matrix, summarize,
)

__all__ = [
    'FINAL_PREDICTORS', 'FULL_PREDICTORS', 'TABLE_PREDICTORS',
    'NameFeatures', 'count_syllables', 'extract', 'feature_matrix', 'summarize',
]
