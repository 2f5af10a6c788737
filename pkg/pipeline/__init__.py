"""Threshold Classifier over Twitter-style user records."""

from .lovins import costem, lovins_stem, strip_ending
from .terms import (
    TERM_KINDS, TermKind, TermList, char_ngrams, scan_tweet, select_top_terms, term_scores,
    tokenize_tweets, user_terms,
)
from .users import ProfileStats, UserProfile, UserRecord, UserRecordError, profile_stats, read_users_jsonl
from .threshold import (
    Classification, FeatureVector, PipelineModel, classify, evaluate, evaluate_holdout, split_halves, train,
    user_features,
)

__all__ = [
    'costem', 'lovins_stem', 'strip_ending',
    'TERM_KINDS', 'TermKind', 'TermList', 'char_ngrams', 'scan_tweet', 'select_top_terms', 'term_scores',
    'tokenize_tweets', 'user_terms',
    'ProfileStats', 'UserProfile', 'UserRecord', 'UserRecordError', 'profile_stats', 'read_users_jsonl',
    'Classification', 'FeatureVector', 'PipelineModel', 'classify', 'evaluate', 'evaluate_holdout', 'split_halves',
    'train', 'user_features',
]
