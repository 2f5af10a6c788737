"""Gender scores from dictionaries and from the NamChar classifier."""

from .dictionary import (
    UNSCORED, GenderScore, Provenance, census_score, dictionary_score, gender_score, namdict_score,
)
from .namchar import (
    NamCharModel, inspect_namchar, namchar_predict, namchar_score, train_namchar, training_names,
)
from .histogram import HistogramBin, score_histogram, write_histogram_csv

__all__ = [
    'UNSCORED', 'GenderScore', 'Provenance', 'census_score', 'dictionary_score', 'gender_score', 'namdict_score',
    'NamCharModel', 'inspect_namchar', 'namchar_predict', 'namchar_score', 'train_namchar', 'training_names',
    'HistogramBin', 'score_histogram', 'write_histogram_csv',
]
