"""Checks against the real Census and nam_dict files when they are present.

Point NAMECHAR_DATA_DIR at a directory holding dist.male.first,
dist.female.first and nam_dict.txt to run these.
"""

import os

import numpy as np
import pytest

from config.settings import CORPUS_CONFIG, NAMCHAR_CONFIG, NAMECHAR_DATA_DIR
from corpus.entries import Source
from corpus.registry import load_paths
from namefeat.features import FINAL_PREDICTORS, feature_matrix
from score.dictionary import gender_score
from score.namchar import inspect_namchar, training_names
from stats.sample import Sample
from stats.selection import SvmSpec, grid_search

FILES = list(CORPUS_CONFIG["census_files"].values()) + [CORPUS_CONFIG["namdict_file"]]
present = all(os.path.isfile(os.path.join(NAMECHAR_DATA_DIR, f)) for f in FILES)

pytestmark = pytest.mark.skipif(not present, reason=f"reference dictionaries not found in {NAMECHAR_DATA_DIR}")

NAMDICT_ONLY = (Source.NAMDICT,)
SUBSAMPLE_SEED = 20160310
SUBSAMPLE_SIZE = 4000


@pytest.fixture(scope="module")
def reference_db():
    return load_paths([os.path.join(NAMECHAR_DATA_DIR, f) for f in FILES])


@pytest.fixture(scope="module")
def table_fit(reference_db):
    return inspect_namchar(reference_db, NAMDICT_ONLY)["fits"]["table"]


def test_census_counts(reference_db):
    census = reference_db.summary()["census"]
    assert census["distinct"] == 5163
    assert census["both_genders"] == 331


@pytest.mark.parametrize("name, expected", [("John", 0.993), ("Ashley", -0.912), ("Berry", 0.714), ("Kim", -0.728)])
def test_census_gender_scores(reference_db, name, expected):
    assert gender_score(reference_db, name).value == pytest.approx(expected, abs=0.01)


def test_namdict_category_counts(reference_db):
    namdict = reference_db.summary()["sources"]["namdict"]
    assert namdict == {
        "male": 18204,
        "mostly_male": 915,
        "male_if_first_part": 7,
        "female": 17328,
        "mostly_female": 722,
        "female_if_first_part": 8,
        "unisex": 8329,
        "total": 45513,
    }


def test_namdict_training_set_size(reference_db):
    tokens, y = training_names(reference_db, NAMDICT_ONLY)
    assert len(tokens) > 30000
    assert 0 < y.sum() < len(y)


@pytest.mark.parametrize("name, sign", [("James", 1), ("Mary", -1), ("Jürgen", 1)])
def test_well_known_names(reference_db, name, sign):
    assert gender_score(reference_db, name).value * sign > 0.8


def test_logistic_fit_odds_and_signs(table_fit):
    assert table_fit["converged"]
    rows = {row["name"]: row for row in table_fit["diagnostics"]["coefficients"]}
    assert 5.0 <= rows["ends_in_vowel"]["odds_ratio"] <= 8.0
    assert rows["ends_in_vowel"]["beta"] > 0
    assert rows["n_bouba_consonants"]["beta"] > 0
    assert rows["n_bouba_vowels"]["beta"] > 0
    assert rows["n_kiki_consonants"]["beta"] < 0


def test_logistic_fit_classification_rates(table_fit):
    classification = table_fit["classification"]
    assert classification["acc"] == pytest.approx(0.7059, abs=0.03)
    assert classification["rec"] == pytest.approx(0.6639, abs=0.03)
    assert classification["specificity"] == pytest.approx(0.7650, abs=0.03)


def test_svm_grid_search_accuracy(reference_db):
    tokens, y = training_names(reference_db, NAMDICT_ONLY)
    rows = np.sort(np.random.default_rng(SUBSAMPLE_SEED).choice(len(tokens), size=SUBSAMPLE_SIZE, replace=False))
    sample = Sample(feature_matrix([tokens[i] for i in rows], FINAL_PREDICTORS), y[rows], list(FINAL_PREDICTORS))
    reported = NAMCHAR_CONFIG["gamma"]
    grid = [(0.1, 1.0), (reported, 1.0), (0.5, 1.0)]
    search = grid_search(SvmSpec(gamma=reported, cost=1.0, seed=SUBSAMPLE_SEED), sample, grid,
                         folds=10, repeats=3, seed=SUBSAMPLE_SEED, n_jobs=-1)
    assert search.cv.accuracy_mean == pytest.approx(0.709, abs=0.02)
    assert search.cv.kappa_mean == pytest.approx(0.419, abs=0.05)
